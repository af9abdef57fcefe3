#include "lns/lucas.hpp"

#include "lns/error.hpp"

#include <algorithm>
#include <numeric>

namespace lns {

void validate(const LucasParams& p) {
    if (p.d != 1 && p.d != 5 && p.d != 11 && p.d != 55) throw InputError("lucas: d must be one of 1, 5, 11, 55");
    bool u_even = p.u % 2 == 0, v_even = p.v % 2 == 0;
    if (p.d == 1 || p.d == 5) {
        if (!u_even || !v_even) throw InputError("lucas: u and v must both be even for d = 1, 5");
    } else if (u_even != v_even) {
        throw InputError("lucas: u and v must have the same parity for d = 11, 55");
    }
    Int n4 = p.u * p.u + p.d * p.v * p.v;
    if (n4 % 4 != 0 || n4 == 0) throw InputError("lucas: (u^2 + d v^2)/4 must be a positive integer");
}

Int lucas_norm(const LucasParams& p) {
    validate(p);
    return (p.u * p.u + p.d * p.v * p.v) / 4;
}

std::vector<Int> lucas_sequence(const LucasParams& p, long count) {
    if (count < 0) throw InputError("lucas: negative index");
    Int nm = lucas_norm(p);
    std::vector<Int> L;
    L.reserve(static_cast<std::size_t>(count));
    for (long m = 0; m < count; ++m) {
        if (m == 0) L.push_back(0);
        else if (m == 1) L.push_back(1);
        else L.push_back(p.u * L[m - 1] - nm * L[m - 2]);
    }
    return L;
}

Int lucas_term(const LucasParams& p, long m) {
    if (m < 0) throw InputError("lucas: negative index");
    validate(p);
    Int nm = lucas_norm(p);
    Int a = 0, b = 1;
    if (m == 0) return a;
    for (long k = 1; k < m; ++k) {
        Int c = p.u * b - nm * a;
        a = b;
        b = c;
    }
    return b;
}

Int lucas_term_by_powering(const LucasParams& p, long m) {
    if (m < 0) throw InputError("lucas: negative index");
    validate(p);
    if (p.v == 0) throw DomainError("lucas: mu is rational");
    // (a + b sqrt(-d)) / 2
    Int ra = 2, rb = 0;
    Int ba = p.u, bb = p.v;
    auto mul = [&](const Int& a1, const Int& b1, const Int& a2, const Int& b2, Int& a, Int& b) {
        Int x = a1 * a2 - p.d * b1 * b2, y = a1 * b2 + a2 * b1;
        a = x / 2;
        b = y / 2;
    };
    for (long e = m; e > 0; e >>= 1) {
        if (e & 1) mul(ra, rb, ba, bb, ra, rb);
        mul(ba, bb, ba, bb, ba, bb);
    }
    if (rb % p.v != 0) throw MathMismatch("lucas: mu^m - conj(mu)^m not divisible by mu - conj(mu)");
    return rb / p.v;
}

bool is_degenerate(const LucasParams& p) {
    validate(p);
    if (p.v == 0 || p.u == 0) return true;
    // Roots of unity in imaginary quadratic fields have order dividing 4 or 6.
    auto L = lucas_sequence(p, 13);
    for (long m = 2; m <= 12; ++m) {
        if (L[m] == 0) return true;
    }
    return false;
}

bool lucas_gcd_check(const LucasParams& p, long m, long k) {
    if (m < 0 || k < 0) throw InputError("lucas: negative index");
    if (is_degenerate(p)) throw DomainError("lucas: degenerate parameters");
    long g = std::gcd(m, k);
    return gcd(lucas_term(p, m), lucas_term(p, k)) == abs(lucas_term(p, g));
}

bool primitive_divisor_test(const LucasParams& p, long n, const Int& q) {
    if (n < 2) throw InputError("primitive_divisor_test: n must be >= 2");
    auto L = lucas_sequence(p, n + 1);
    if (L[n] % q != 0) return false;
    if ((p.d * p.v * p.v) % q == 0) return false;
    for (long m = 1; m < n; ++m) {
        if (L[m] % q == 0) return false;
    }
    return true;
}

std::optional<long> rank_of_apparition(const LucasParams& p, const Int& q) {
    Int nm = lucas_norm(p);
    if (nm % q == 0) throw InputError("rank_of_apparition: q divides mu conj(mu)");
    if (!q.fits_slong_p() || q > 100000) throw InputError("rank_of_apparition: q too large");
    long limit = q.get_si() * q.get_si() + q.get_si();
    Int a = 0, b = 1;  // L_{m-1}, L_m mod q
    Int u = mod(p.u, q), c = mod(nm, q);
    for (long m = 1; m <= limit; ++m) {
        if (b == 0) return m;
        Int nb = mod(u * b - c * a, q);
        a = b;
        b = nb;
    }
    return std::nullopt;
}

bool ExclusionReport::all_excluded() const {
    return std::all_of(primes.begin(), primes.end(), [](const PrimeExclusion& e) { return e.excluded; });
}

ExclusionReport exclude_small_primes(const LucasParams& p, long n) {
    if (n < 5 || !is_prime(n)) throw InputError("exclude_small_primes: n must be a prime >= 5");
    ExclusionReport rep;
    rep.params = p;
    rep.n = n;
    Int nm = lucas_norm(p);
    auto L = lucas_sequence(p, 5);
    // (mu - conj(mu))^2 L_1 L_2 L_3 L_4 up to sign.
    Int prod = p.d * p.v * p.v * L[1] * L[2] * L[3] * L[4];
    for (long q : {2L, 5L, 11L}) {
        PrimeExclusion e;
        e.q = q;
        if (prod % q == 0) {
            e.excluded = true;
            e.argument = "q divides (mu - conj(mu))^2 L1 L2 L3 L4";
        } else if (nm % q == 0) {
            // L_m = u L_{m-1} mod q, so L_m = u^(m-1) is a unit.
            e.excluded = p.u % q != 0;
            e.argument = q == 2 ? "L_m = L_{m-1} mod 2" : "L_m = u L_{m-1} mod " + std::to_string(q);
        } else {
            e.rank = rank_of_apparition(p, q);
            if (q == 11) e.legendre = legendre(mod(-p.d * p.v * p.v, Int(11)), Int(11));
            // q | L_n iff rank | n; n is prime and L_1 = 1, so only rank == n
            // makes q primitive.
            e.excluded = !e.rank || *e.rank != n;
            e.argument = "rank of apparition " + (e.rank ? std::to_string(*e.rank) : std::string("none")) + " != n";
        }
        rep.primes.push_back(e);
    }
    return rep;
}

namespace {

Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 64;
        auto f = [&](const Int& t) { return Int((t * t + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(Int(x - y))) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Int(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Int n, std::vector<Int>& out) {
    if (n == 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    for (long p = 17; p < 10000 && Int(p) * p <= n; p += 2) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    Int rest = n;
    while (rest % d == 0) rest /= d;
    std::vector<Int> tmp;
    factor_into(rest, tmp);
    out.insert(out.end(), tmp.begin(), tmp.end());
}

}  // namespace

std::vector<Int> prime_factors(const Int& n) {
    if (n == 0) throw InputError("prime_factors: zero");
    std::vector<Int> out;
    factor_into(abs(n), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Int> primitive_divisors(const LucasParams& p, long n) {
    if (n < 2) throw InputError("primitive_divisors: n must be >= 2");
    Int Ln = lucas_term(p, n);
    if (Ln == 0) throw DomainError("primitive_divisors: L_n = 0");
    std::vector<Int> out;
    for (const Int& q : prime_factors(Ln)) {
        if (primitive_divisor_test(p, n, q)) out.push_back(q);
    }
    return out;
}

const std::vector<DefectivePair>& defective_pairs_prime_index() {
    // Prime indices n >= 5 of the table of n-defective Lucas pairs, up to
    // equivalence.
    static const std::vector<DefectivePair> t{
        {5, 1, 5},   {5, 1, -7},   {5, 2, -40},  {5, 1, -11},   {5, 1, -15},
        {5, 12, -76}, {5, 12, -1364}, {7, 1, -7}, {7, 1, -19},   {13, 1, -7},
    };
    return t;
}

namespace {

bool smooth_2_5_11(Int n) {
    n = abs(n);
    if (n == 0) return false;
    for (long p : {2L, 5L, 11L}) {
        while (n % p == 0) n /= p;
    }
    return n == 1;
}

}  // namespace

std::vector<BhvCandidate> bhv_gate(long n) {
    if (n < 2 || !is_prime(n)) throw InputError("bhv_gate: n must be prime");
    std::vector<BhvCandidate> out;
    if (n >= 30) return out;
    for (const auto& e : defective_pairs_prime_index()) {
        if (e.n != n || e.b >= 0) continue;
        Int dv2 = -e.b;
        for (int d : {1, 5, 11, 55}) {
            if (dv2 % d != 0) continue;
            Int v2 = dv2 / d;
            if (!is_square(v2)) continue;
            LucasParams p{e.a, isqrt(v2), d};
            try {
                validate(p);
            } catch (const InputError&) {
                continue;
            }
            if (!primitive_divisors(p, n).empty()) {
                throw DataIntegrityError("bhv_gate: table entry has a primitive divisor");
            }
            if (!smooth_2_5_11(lucas_term(p, n))) continue;
            out.push_back({n, p.u, dv2, d, p.v});
        }
    }
    return out;
}

LucasVerdict lucas_verdict(int d, long n) {
    if (d != 1 && d != 5 && d != 11 && d != 55) throw InputError("lucas: d must be one of 1, 5, 11, 55");
    if (n < 5 || !is_prime(n)) throw InputError("lucas: n must be a prime >= 5");
    LucasVerdict v;
    v.d = d;
    v.n = n;
    for (const auto& c : bhv_gate(n)) {
        if (c.d == d) v.candidates.push_back(c);
    }
    if (n >= 30) {
        v.rejections.push_back("n >= 30: L_n has a primitive divisor, excluded for q = 2, 5, 11");
    } else if (v.candidates.empty()) {
        v.rejections.push_back("no defective pair with d = " + std::to_string(d) + " at n = " + std::to_string(n));
    }
    for (const auto& c : v.candidates) {
        for (int su : {1, -1}) {
            for (int sv : {1, -1}) {
                LucasParams p{su * c.u, sv * c.v, d};
                Int Ln = lucas_term(p, n);
                // 2z = v L_n
                Int two_z = p.v * Ln;
                if (two_z % 2 != 0) {
                    v.rejections.push_back("u=" + p.u.get_str() + " v=" + p.v.get_str() + ": L_n=" + Ln.get_str() +
                                           ", 2z = " + two_z.get_str() + " is odd");
                    continue;
                }
                Int z = two_z / 2;
                if (!smooth_2_5_11(z) || z % 2 == 0) {
                    v.rejections.push_back("u=" + p.u.get_str() + " v=" + p.v.get_str() + ": z = " + z.get_str() +
                                           " is not +-5^alpha 11^beta");
                    continue;
                }
                Int ra = 2, rb = 0, ba = p.u, bb = p.v;
                for (long e = n; e > 0; e >>= 1) {
                    if (e & 1) {
                        Int x = ra * ba - d * rb * bb, y = ra * bb + ba * rb;
                        ra = x / 2;
                        rb = y / 2;
                    }
                    Int x = ba * ba - d * bb * bb, y = 2 * ba * bb;
                    ba = x / 2;
                    bb = y / 2;
                }
                if (ra % 2 != 0) {
                    v.rejections.push_back("u=" + p.u.get_str() + " v=" + p.v.get_str() + ": x = " + ra.get_str() +
                                           "/2 is not an integer");
                    continue;
                }
                v.solutions.push_back({ra / 2, z});
            }
        }
    }
    return v;
}

}  // namespace lns
