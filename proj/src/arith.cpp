#include "lns/arith.hpp"

#include "lns/error.hpp"

#include <algorithm>

namespace lns {

Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int ipow(long base, unsigned long exp) { return ipow(Int(base), exp); }

Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_cube(const Int& n, Int* root) {
    Int a = abs(n);
    Int r;
    const bool exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3) != 0;
    if (exact && root != nullptr) *root = n < 0 ? Int(-r) : r;
    return exact;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw DomainError("valuation of zero is infinite");
    if (p < 2) throw DomainError("valuation base must be a prime");
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& x, const Int& p) {
    if (x == 0) throw DomainError("valuation of zero is infinite");
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inverse_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("no inverse of " + to_string(a) + " modulo " + to_string(m));
    return r;
}

Int power_mod(const Int& base, const Int& exp, const Int& m) {
    Int b = base;
    Int e = exp;
    if (e < 0) {
        b = inverse_mod(b, m);
        e = -e;
    }
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int rat_mod(const Rat& x, const Int& m) {
    return mod(x.get_num() * inverse_mod(x.get_den(), m), m);
}

bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

Int sqrt_mod_prime_power(const Int& a, const Int& p, unsigned long k) {
    const Int a0 = mod(a, p);
    if (a0 == 0 || legendre(a0, p) != 1)
        throw DomainError(to_string(a) + " is not a unit square modulo " + to_string(p));
    // Tonelli-Shanks is overkill for the small primes used here.
    Int r = 1;
    while (mod(r * r - a0, p) != 0) ++r;
    Int pk = p;
    unsigned long prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        pk = ipow(p, prec);
        // r <- r - (r^2 - a) / (2r)
        r = mod(r - (r * r - a) * inverse_mod(2 * r, pk), pk);
    }
    return mod(r, ipow(p, k));
}

std::vector<unsigned long> padic_digits(const Int& n, const Int& p, std::size_t count) {
    std::vector<unsigned long> out;
    out.reserve(count);
    Int v = n;
    for (std::size_t i = 0; i < count; ++i) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        out.push_back(r.get_ui());
        v = q;
    }
    return out;
}

std::string digit_string(const std::vector<unsigned long>& digits) {
    std::string s = "0.";
    for (auto d : digits) {
        if (d < 10)
            s += static_cast<char>('0' + d);
        else
            s += "(" + std::to_string(d) + ")";
    }
    return s;
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

Int trunc_div(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace lns
