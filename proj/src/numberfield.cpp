#include "lns/numberfield.hpp"

#include "lns/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace lns {

namespace {

// Solve x * M = v for a square rational matrix (rows of M are basis vectors).
std::vector<RatVec> invert(std::vector<RatVec> m) {
    const std::size_t n = m.size();
    std::vector<RatVec> inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw DataIntegrityError("integral basis is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rat d = m[col][col];
        for (std::size_t k = 0; k < n; ++k) {
            m[col][k] /= d;
            inv[col][k] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t k = 0; k < n; ++k) {
                m[r][k] -= f * m[col][k];
                inv[r][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

std::vector<Int> divisors(Int n) {
    n = abs(n);
    std::vector<std::pair<Int, int>> fac;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        fac.emplace_back(p, e);
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

Int eval_poly(const std::vector<Int>& poly, const Int& x) {
    Int acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

void FieldData::finalize() {
    const int n = degree();
    if (n < 1) throw DataIntegrityError(name + ": defining polynomial has degree < 1");
    if (defining_poly.back() != 1) throw DataIntegrityError(name + ": defining polynomial not monic");
    if (static_cast<int>(integral_basis.size()) != n)
        throw DataIntegrityError(name + ": integral basis size does not match degree");
    for (const auto& b : integral_basis)
        if (static_cast<int>(b.size()) != n)
            throw DataIntegrityError(name + ": integral basis element has wrong length");
    basis_inv_ = invert(integral_basis);
}

const FieldElem& FieldData::element(const std::string& label) const {
    if (auto it = units.find(label); it != units.end()) return it->second;
    if (auto it = primes.find(label); it != primes.end()) return it->second;
    throw InputError(name + ": unknown element '" + label + "'");
}

Int FieldData::basis_denominator() const {
    Int l = 1;
    for (const auto& b : integral_basis)
        for (const auto& c : b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

FieldElem field_one(const FieldData& fd) { return field_int(fd, 1); }

FieldElem field_int(const FieldData& fd, const Int& n) {
    RatVec v(fd.degree(), Rat(0));
    v[0] = n;
    return power_basis_to_elem(v, fd);
}

FieldElem field_theta(const FieldData& fd) {
    RatVec v(fd.degree(), Rat(0));
    if (fd.degree() > 1) v[1] = 1;
    return power_basis_to_elem(v, fd);
}

RatVec elem_to_power_basis(const FieldElem& e, const FieldData& fd) {
    const int n = fd.degree();
    if (static_cast<int>(e.coords.size()) != n)
        throw InputError("element has " + std::to_string(e.coords.size()) + " coordinates, field degree is " +
                         std::to_string(n));
    RatVec out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) out[k] += Rat(e.coords[i]) * fd.integral_basis[i][k];
    for (auto& c : out) c.canonicalize();
    return out;
}

FieldElem power_basis_to_elem(const RatVec& v, const FieldData& fd) {
    const int n = fd.degree();
    const auto& inv = fd.basis_inverse();
    FieldElem e;
    e.coords.resize(n);
    for (int i = 0; i < n; ++i) {
        Rat c = 0;
        for (int k = 0; k < n; ++k) c += v[k] * inv[k][i];
        c.canonicalize();
        if (c.get_den() != 1) throw DataIntegrityError(fd.name + ": element is not integral for the basis");
        e.coords[i] = c.get_num();
    }
    return e;
}

RatVec power_mul(const RatVec& a, const RatVec& b, const FieldData& fd) {
    const int n = fd.degree();
    RatVec prod(2 * n - 1, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    }
    // theta^n = -sum_{k<n} f_k theta^k
    for (int d = 2 * n - 2; d >= n; --d) {
        if (prod[d] == 0) continue;
        const Rat c = prod[d];
        prod[d] = 0;
        for (int k = 0; k < n; ++k) prod[d - n + k] -= c * Rat(fd.defining_poly[k]);
    }
    prod.resize(n);
    for (auto& c : prod) c.canonicalize();
    return prod;
}

FieldElem elem_mul(const FieldElem& a, const FieldElem& b, const FieldData& fd) {
    return power_basis_to_elem(power_mul(elem_to_power_basis(a, fd), elem_to_power_basis(b, fd), fd), fd);
}

FieldElem elem_pow(const FieldElem& a, unsigned long k, const FieldData& fd) {
    RatVec base = elem_to_power_basis(a, fd);
    RatVec acc(fd.degree(), Rat(0));
    acc[0] = 1;
    while (k > 0) {
        if (k & 1) acc = power_mul(acc, base, fd);
        k >>= 1;
        if (k > 0) base = power_mul(base, base, fd);
    }
    return power_basis_to_elem(acc, fd);
}

std::vector<RatVec> regular_representation(const RatVec& a, const FieldData& fd) {
    const int n = fd.degree();
    std::vector<RatVec> m(n, RatVec(n, Rat(0)));
    RatVec col = a;
    RatVec theta(n, Rat(0));
    if (n > 1) theta[1] = 1;
    for (int k = 0; k < n; ++k) {
        for (int r = 0; r < n; ++r) m[r][k] = col[r];
        if (k + 1 < n) col = power_mul(col, theta, fd);
    }
    return m;
}

Rat determinant(std::vector<RatVec> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    det.canonicalize();
    return det;
}

Rat power_norm(const RatVec& a, const FieldData& fd) { return determinant(regular_representation(a, fd)); }

Rat elem_norm(const FieldElem& e, const FieldData& fd) { return power_norm(elem_to_power_basis(e, fd), fd); }

RatVec power_inverse(const RatVec& a, const FieldData& fd) {
    // Solve M x = e_0 where M is the regular representation.
    auto m = regular_representation(a, fd);
    const std::size_t n = m.size();
    RatVec rhs(n, Rat(0));
    rhs[0] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw DomainError(fd.name + ": cannot invert zero element");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rhs[i] / m[i][i];
        x[i].canonicalize();
    }
    return x;
}

FieldElem elem_inverse_unit(const FieldElem& a, const FieldData& fd) {
    return power_basis_to_elem(power_inverse(elem_to_power_basis(a, fd), fd), fd);
}

FieldElem elem_pow_signed(const FieldElem& a, long k, const FieldData& fd) {
    if (k >= 0) return elem_pow(a, static_cast<unsigned long>(k), fd);
    return elem_pow(elem_inverse_unit(a, fd), static_cast<unsigned long>(-k), fd);
}

bool verify_unit(const FieldElem& e, const FieldData& fd) { return abs(elem_norm(e, fd)) == 1; }

bool FactorizationReport::all_hold() const {
    return std::all_of(identities.begin(), identities.end(), [](const auto& c) { return c.holds; }) &&
           std::all_of(prime_norms.begin(), prime_norms.end(), [](const auto& c) { return c.prime_power; });
}

FactorizationReport verify_prime_factorization(const FieldData& fd) {
    FactorizationReport rep;
    for (const auto& id : fd.factorizations) {
        // Move negative powers to the left: p * prod(neg) = sign * prod(pos).
        FieldElem lhs = field_int(fd, id.rational_prime);
        FieldElem rhs = field_int(fd, id.sign);
        for (const auto& [label, e] : id.factors) {
            const FieldElem& g = fd.element(label);
            if (e < 0)
                lhs = elem_mul(lhs, elem_pow(g, static_cast<unsigned long>(-e), fd), fd);
            else
                rhs = elem_mul(rhs, elem_pow(g, static_cast<unsigned long>(e), fd), fd);
        }
        rep.identities.push_back({id.label, lhs == rhs});
        if (lhs != rhs) throw DataIntegrityError(fd.name + ": factorization identity fails: " + id.label);
    }
    for (const auto& [label, pi] : fd.primes) {
        PrimeNormCheck c;
        c.label = label;
        c.norm = elem_norm(pi, fd);
        const Int a = abs(c.norm.get_num());
        if (c.norm.get_den() == 1 && a > 1) {
            Int q = 2;
            while (q * q <= a && a % q != 0) ++q;
            if (a % q != 0) q = a;
            Int rest = a;
            while (rest % q == 0) {
                rest /= q;
                ++c.residue_degree;
            }
            c.prime = q;
            c.prime_power = rest == 1;
        }
        rep.prime_norms.push_back(c);
        if (!c.prime_power)
            throw DataIntegrityError(fd.name + ": norm of " + label + " is not a prime power: " + to_string(c.norm));
    }
    return rep;
}

bool is_irreducible(const std::vector<Int>& poly) {
    const int n = static_cast<int>(poly.size()) - 1;
    if (n < 1 || poly.back() != 1) throw InputError("irreducibility test needs a monic polynomial");
    if (n == 1) return true;
    if (n > 4) throw InputError("irreducibility test supports degree <= 4");
    if (poly[0] == 0) return false;
    const auto divs = divisors(poly[0]);
    for (const auto& d : divs)
        if (eval_poly(poly, d) == 0 || eval_poly(poly, -d) == 0) return false;
    if (n <= 3) return true;
    // (t^2 + a t + b)(t^2 + c t + d): bd = f0, a + c = f3, ac + b + d = f2, ad + bc = f1.
    for (const auto& dv : divs) {
        for (int sgn : {1, -1}) {
            const Int b = sgn * dv;
            const Int d = poly[0] / b;
            const Int s = poly[3];
            const Int p = poly[2] - b - d;  // = ac
            const Int disc = s * s - 4 * p;
            if (!is_square(disc)) continue;
            const Int r = isqrt(disc);
            for (const Int& a2 : {Int(s + r), Int(s - r)}) {
                if (a2 % 2 != 0) continue;
                const Int a = a2 / 2;
                const Int c = s - a;
                if (a * d + b * c == poly[1]) return false;
            }
        }
    }
    return true;
}

void verify_field(const FieldData& fd) {
    if (!is_irreducible(fd.defining_poly)) throw DataIntegrityError(fd.name + ": defining polynomial is reducible");
    for (const auto& [label, u] : fd.units)
        if (!verify_unit(u, fd)) throw DataIntegrityError(fd.name + ": " + label + " is not a unit");
    verify_prime_factorization(fd);
}

Int eval_poly_mod(const std::vector<Int>& poly, const Int& x, const Int& m) {
    Int acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = mod(acc * x + *it, m);
    return acc;
}

Int reduce_mod_split_prime(const FieldElem& e, const FieldData& fd, const Int& q, const Int& root) {
    if (eval_poly_mod(fd.defining_poly, root, q) != 0)
        throw InputError(to_string(root) + " is not a root of the defining polynomial modulo " + to_string(q));
    if (gcd(fd.basis_denominator(), q) != 1)
        throw DomainError("prime " + to_string(q) + " divides an integral basis denominator; unusable");
    const RatVec pb = elem_to_power_basis(e, fd);
    Int acc = 0;
    Int pw = 1;
    for (const auto& c : pb) {
        acc = mod(acc + rat_mod(c, q) * pw, q);
        pw = mod(pw * root, q);
    }
    return acc;
}

long mult_order_mod(const Int& r, const Int& q) {
    const Int x = mod(r, q);
    if (x == 0) throw DomainError("multiplicative order of 0 is undefined");
    if (gcd(x, q) != 1) throw DomainError("residue not invertible modulo " + to_string(q));
    Int acc = x;
    long k = 1;
    while (acc != 1) {
        acc = mod(acc * x, q);
        ++k;
    }
    return k;
}

}  // namespace lns
