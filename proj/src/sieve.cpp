#include "lns/sieve.hpp"

#include "lns/error.hpp"

#include <algorithm>
#include <numeric>

namespace lns {

namespace {

long lmod(long a, long q) {
    long r = a % q;
    return r < 0 ? r + q : r;
}

long mulmod(long a, long b, long q) { return static_cast<long>((static_cast<__int128>(a) * b) % q); }

long powmod(long b, long e, long q) {
    long r = 1 % q;
    b = lmod(b, q);
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, q);
        b = mulmod(b, b, q);
        e >>= 1;
    }
    return r;
}

long invmod(long a, long q) { return powmod(a, q - 2, q); }

long order(long x, long q) { return mult_order_mod(Int(x), Int(q)); }

// Residues of the nine generators at the four roots.
struct Images {
    std::array<long, 4> alpha{};
    std::array<std::array<long, 4>, 4> var{};  // [var][root]
};

Images images(const FieldData& fd, const AlphaCase& alpha, const SplitPrime& sp) {
    Images im;
    const auto& gens = tm_generators();
    const auto ex = alpha_exponents(alpha);
    const std::array<std::string, 4> vg = {"eps1", "eps2", "pi51", "pi111"};
    for (int r = 0; r < 4; ++r) {
        const Int root(sp.roots[r]);
        const Int q(sp.q);
        long a = 1;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (ex[g] == 0) continue;
            const long v = reduce_mod_split_prime(fd.element(gens[g]), fd, q, root).get_si();
            a = mulmod(a, powmod(v, ex[g], sp.q), sp.q);
        }
        im.alpha[r] = a;
        for (int k = 0; k < 4; ++k) im.var[k][r] = reduce_mod_split_prime(fd.element(vg[k]), fd, q, root).get_si();
    }
    return im;
}

// Residue of h at each root for the exponents e (a's may be negative).
std::array<long, 4> residues(const Images& im, const ExpQuad& e, long q) {
    std::array<long, 4> h;
    for (int r = 0; r < 4; ++r) {
        long v = im.alpha[r];
        for (int k = 0; k < 4; ++k) {
            const long base = e[k] >= 0 ? im.var[k][r] : invmod(im.var[k][r], q);
            v = mulmod(v, powmod(base, e[k] >= 0 ? e[k] : -e[k], q), q);
        }
        h[r] = v;
    }
    return h;
}

bool first_relation(const SplitPrime& sp, const std::array<long, 4>& h) {
    return lmod(sp.e3.first * h[0] + sp.e3.second * h[1] - h[2], sp.q) == 0;
}

bool second_relation(const SplitPrime& sp, const std::array<long, 4>& h) {
    return lmod(sp.e4.first * h[0] + sp.e4.second * h[1] - h[3], sp.q) == 0;
}

// Representatives of r modulo period in [lo, hi].
std::vector<long> lift(long r, long period, long lo, long hi) {
    std::vector<long> out;
    long start = lo + lmod(r - lo, period);
    for (long v = start; v <= hi; v += period) out.push_back(v);
    return out;
}

}  // namespace

SplitPrime split_prime(const FieldData& fd, long q) {
    SplitPrime sp;
    sp.q = q;
    std::vector<long> roots;
    for (long t = 0; t < q; ++t)
        if (eval_poly_mod(fd.defining_poly, Int(t), Int(q)) == 0) roots.push_back(t);
    if (roots.size() != 4) throw DomainError(std::to_string(q) + " does not split into four first degree primes");
    std::copy(roots.begin(), roots.end(), sp.roots.begin());
    // H(r) = x - r y is linear in r, so H_k = (1 - b) H_1 + b H_2 with b = (r_k - r_1)/(r_2 - r_1).
    const long inv = invmod(lmod(sp.roots[1] - sp.roots[0], q), q);
    const long b3 = mulmod(lmod(sp.roots[2] - sp.roots[0], q), inv, q);
    const long b4 = mulmod(lmod(sp.roots[3] - sp.roots[0], q), inv, q);
    sp.e3 = {lmod(1 - b3, q), b3};
    sp.e4 = {lmod(1 - b4, q), b4};
    return sp;
}

SieveCaseTrace sieve_case(const FieldData& fd, const AlphaCase& alpha, const SieveBox& box,
                          const std::vector<long>& chain) {
    if (chain.empty()) throw InputError("empty sieve chain");
    if (box.n1 < 0 || box.n2 < 0 || box.A < 0) throw InputError("negative sieve bounds");
    SieveCaseTrace tr;
    tr.alpha = alpha;
    const SplitPrime sp = split_prime(fd, chain.front());
    const long q = sp.q;
    tr.first_prime = q;
    const Images im = images(fd, alpha, sp);
    for (int k = 0; k < 4; ++k) {
        long o = 1;
        for (int r = 0; r < 4; ++r) o = std::lcm(o, order(im.var[k][r], q));
        tr.orders[k] = o;
    }
    const std::array<long, 4> hi = {box.A, box.A, box.n1, box.n2};
    const std::array<long, 4> lo = {-box.A, -box.A, 0, 0};
    // Per unknown: the actual values when the range is shorter than the period,
    // otherwise one residue per class.
    std::array<std::vector<long>, 4> vals;
    std::array<bool, 4> exact{};
    tr.residue_box = 1;
    for (int k = 0; k < 4; ++k) {
        exact[k] = hi[k] - lo[k] + 1 < tr.orders[k];
        if (exact[k])
            for (long v = lo[k]; v <= hi[k]; ++v) vals[k].push_back(v);
        else
            for (long v = 0; v < tr.orders[k]; ++v) vals[k].push_back(v);
        tr.residue_box *= static_cast<long>(vals[k].size());
    }
    std::array<std::array<std::vector<long>, 4>, 4> pw;
    for (int k = 0; k < 4; ++k)
        for (int r = 0; r < 4; ++r) {
            const long inv = invmod(im.var[k][r], q);
            for (long v : vals[k]) pw[k][r].push_back(v >= 0 ? powmod(im.var[k][r], v, q) : powmod(inv, -v, q));
        }
    std::vector<ExpQuad> classes;
    for (std::size_t i0 = 0; i0 < vals[0].size(); ++i0)
        for (std::size_t i1 = 0; i1 < vals[1].size(); ++i1)
            for (std::size_t i2 = 0; i2 < vals[2].size(); ++i2)
                for (std::size_t i3 = 0; i3 < vals[3].size(); ++i3) {
                    std::array<long, 4> h;
                    for (int r = 0; r < 4; ++r) {
                        long v = mulmod(im.alpha[r], pw[0][r][i0], q);
                        v = mulmod(v, pw[1][r][i1], q);
                        v = mulmod(v, pw[2][r][i2], q);
                        h[r] = mulmod(v, pw[3][r][i3], q);
                    }
                    if (!first_relation(sp, h)) continue;
                    ++tr.first_congruence;
                    if (!second_relation(sp, h)) continue;
                    ++tr.both_congruences;
                    classes.push_back({vals[0][i0], vals[1][i1], vals[2][i2], vals[3][i3]});
                }

    std::vector<ExpQuad> current;
    for (const auto& c : classes) {
        std::array<std::vector<long>, 4> opts;
        for (int k = 0; k < 4; ++k) opts[k] = exact[k] ? std::vector<long>{c[k]} : lift(c[k], tr.orders[k], lo[k], hi[k]);
        for (long v0 : opts[0])
            for (long v1 : opts[1])
                for (long v2 : opts[2])
                    for (long v3 : opts[3]) current.push_back({v0, v1, v2, v3});
    }
    tr.lifted = static_cast<long>(current.size());

    for (std::size_t s = 1; s < chain.size(); ++s) {
        const SplitPrime sq = split_prime(fd, chain[s]);
        const Images iq = images(fd, alpha, sq);
        std::vector<ExpQuad> next;
        for (const auto& e : current) {
            const auto h = residues(iq, e, sq.q);
            if (first_relation(sq, h) && second_relation(sq, h)) next.push_back(e);
        }
        current = std::move(next);
        tr.filters.push_back({sq.q, static_cast<long>(current.size())});
    }
    tr.survivors = current;
    for (const auto& e : current) tr.checks.push_back(check_survivor(fd, alpha, e));
    return tr;
}

bool SieveCaseTrace::accepted_any() const {
    return std::any_of(checks.begin(), checks.end(), [](const SurvivorCheck& c) { return c.accepted; });
}

SurvivorCheck check_survivor(const FieldData& fd, const AlphaCase& alpha, const ExpQuad& e) {
    SurvivorCheck c;
    c.e = e;
    c.linear = is_linear_form_value(fd, alpha, e, &c.x, &c.y);
    if (!c.linear) {
        c.reason = "not of the form x - theta y";
        return c;
    }
    Int f = 0;
    Int xp = 1;
    for (std::size_t k = 0; k < fd.defining_poly.size(); ++k) {
        // y^4 g(x/y) with g monic: sum g_k x^k y^(4-k)
        f += fd.defining_poly[k] * xp * ipow(c.y, static_cast<unsigned long>(fd.degree() - static_cast<int>(k)));
        xp *= c.x;
    }
    c.form_value = f;
    const long cc = e[2] + alpha.j1, dd = e[3] + alpha.j2;
    const bool cd_ok = (e[2] > 0 ? alpha.j1 == 0 : true) && (e[3] > 0 ? alpha.j2 == 0 : true);
    const Int rhs = 2 * ipow(13, 6) * ipow(5, static_cast<unsigned long>(cc)) * ipow(11, static_cast<unsigned long>(dd));
    if (f != rhs)
        c.reason = f == -rhs ? "form value has the wrong sign" : "form value mismatch";
    else if (!cd_ok)
        c.reason = "exponent rule for (c, d) violated";
    else if (mod(c.x, Int(338)) != 0)
        c.reason = "x not divisible by 2*13^2";
    else if (gcd(c.x, c.y) != 1)
        c.reason = "x and y not coprime";
    else
        c.accepted = true;
    return c;
}

bool is_linear_form_value(const FieldData& fd, const AlphaCase& alpha, const ExpQuad& e, Int* x, Int* y) {
    const auto& gens = tm_generators();
    const auto ex = alpha_exponents(alpha);
    FieldElem h = field_one(fd);
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (ex[g] != 0) h = elem_mul(h, elem_pow(fd.element(gens[g]), static_cast<unsigned long>(ex[g]), fd), fd);
    const std::array<std::string, 4> vg = {"eps1", "eps2", "pi51", "pi111"};
    for (int k = 0; k < 4; ++k) {
        const FieldElem f = k < 2 ? elem_pow_signed(fd.element(vg[k]), e[k], fd)
                                  : elem_pow(fd.element(vg[k]), static_cast<unsigned long>(e[k]), fd);
        h = elem_mul(h, f, fd);
    }
    const RatVec pb = elem_to_power_basis(h, fd);
    if (pb[2] != 0 || pb[3] != 0) return false;
    if (x) *x = Int(pb[0].get_num());
    if (y) *y = -Int(pb[1].get_num());
    return pb[0].get_den() == 1 && pb[1].get_den() == 1;
}

std::vector<ExpQuad> brute_force_solutions(const FieldData& fd, const AlphaCase& alpha, const SieveBox& box) {
    std::vector<ExpQuad> out;
    for (long a1 = -box.A; a1 <= box.A; ++a1)
        for (long a2 = -box.A; a2 <= box.A; ++a2)
            for (long n1 = 0; n1 <= box.n1; ++n1)
                for (long n2 = 0; n2 <= box.n2; ++n2)
                    if (is_linear_form_value(fd, alpha, {a1, a2, n1, n2})) out.push_back({a1, a2, n1, n2});
    return out;
}

}  // namespace lns
