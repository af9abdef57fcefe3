#include "lns/descent.hpp"

#include "lns/error.hpp"

#include <algorithm>
#include <cmath>

namespace lns {

ResidueClass residue_class_map(long a, long b) {
    if (a < 0 || b < 0) throw InputError("residue_class_map: exponents must be non-negative");
    return {static_cast<int>(a % 6), static_cast<int>(b % 6), a / 6, b / 6};
}

CurveData curve_data(int i, int j) {
    if (i < 0 || i > 5 || j < 0 || j > 5) throw InputError("curve_data: i, j must lie in [0, 5]");
    return {i, j, ipow(5, i) * ipow(11, j)};
}

namespace {

bool is_55_smooth(Int n) {
    n = abs(n);
    if (n == 0) return false;
    for (long p : {5L, 11L}) {
        while (n % p == 0) n /= p;
    }
    return n == 1;
}

}  // namespace

PointCheck verify_point_on_curve(const Rat& X, const Rat& Y, const CurveData& c) {
    PointCheck r;
    r.on_curve = Y * Y == X * X * X - Rat(c.coefficient);
    r.x_denominator = X.get_den();
    r.y_denominator = Y.get_den();
    r.s_unit_denominators = is_55_smooth(r.x_denominator) && is_55_smooth(r.y_denominator);
    r.x_numerator_prime_to_55 = gcd(X.get_num(), Int(55)) == 1;
    return r;
}

std::pair<Rat, Rat> solution_to_point(long a, long b, const Int& x, const Int& y) {
    ResidueClass rc = residue_class_map(a, b);
    Int s2 = ipow(5, 2 * rc.A) * ipow(11, 2 * rc.B);
    Int s3 = ipow(5, 3 * rc.A) * ipow(11, 3 * rc.B);
    Rat X(y, s2), Y(x, s3);
    X.canonicalize();
    Y.canonicalize();
    return {X, Y};
}

Int eval_cubic(const CubicForm& f, const Int& X, const Int& Y) {
    return ((f[0] * X + f[1] * Y) * X + f[2] * Y * Y) * X + f[3] * Y * Y * Y;
}

std::vector<ThueHit> thue_bounded_search(const CubicForm& f, const std::vector<Int>& rhs_set, long bound) {
    if (bound < 1) throw InputError("thue_bounded_search: bound must be >= 1");
    if (f[0] == 0) throw InputError("thue_bounded_search: the X^3 coefficient must be nonzero");
    std::vector<ThueHit> hits;
    for (long y = -bound; y <= bound; ++y) {
        Int Y = y;
        // X -> f(X, Y) is monotone between consecutive critical points.
        double a = f[0].get_d(), b = f[1].get_d() * y, cc = f[2].get_d() * y * double(y);
        std::vector<long> breaks{-bound, bound};
        double disc = 4 * b * b - 12 * a * cc;
        if (disc >= 0) {
            double sq = std::sqrt(disc);
            for (double r : {(-2 * b - sq) / (6 * a), (-2 * b + sq) / (6 * a)}) {
                if (!(std::abs(r) <= double(bound))) continue;
                long fl = static_cast<long>(std::floor(r));
                for (long k = fl - 1; k <= fl + 2; ++k) {
                    if (k >= -bound && k <= bound) breaks.push_back(k);
                }
            }
        }
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        for (const Int& rhs : rhs_set) {
            std::vector<long> xs;
            for (std::size_t k = 0; k < breaks.size(); ++k) {
                long lo = breaks[k];
                if (eval_cubic(f, lo, Y) == rhs) xs.push_back(lo);
                if (k + 1 == breaks.size()) break;
                long hi = breaks[k + 1];
                if (hi - lo < 2) continue;
                // Strict interior (lo, hi): binary search on a monotone run.
                Int flo = eval_cubic(f, lo, Y), fhi = eval_cubic(f, hi, Y);
                bool increasing = fhi > flo;
                long l = lo + 1, h = hi - 1;
                while (l <= h) {
                    long mid = l + (h - l) / 2;
                    Int v = eval_cubic(f, mid, Y);
                    if (v == rhs) {
                        xs.push_back(mid);
                        break;
                    }
                    if ((v < rhs) == increasing) l = mid + 1;
                    else h = mid - 1;
                }
            }
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
            for (long x : xs) hits.push_back({Int(x), Y, rhs});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const ThueHit& p, const ThueHit& q) {
        if (p.rhs != q.rhs) return p.rhs < q.rhs;
        if (p.X != q.X) return p.X < q.X;
        return p.Y < q.Y;
    });
    return hits;
}

namespace {

// Power-basis coordinates of eps as integers.
std::array<Int, 3> eps_power_coeffs(const FieldData& cubic) {
    if (cubic.degree() != 3 || cubic.defining_poly != std::vector<Int>{-275, 0, 0, 1}) {
        throw InputError("descent: the cubic field must be Q(275^(1/3))");
    }
    RatVec p = elem_to_power_basis(cubic.element("eps"), cubic);
    std::array<Int, 3> r;
    for (int k = 0; k < 3; ++k) {
        if (p[k].get_den() != 1) throw DataIntegrityError("descent: eps is not in Z[theta]");
        r[k] = p[k].get_num();
    }
    return r;
}

using Cubic3 = std::array<Poly, 3>;

Cubic3 mul_mod_theta(const Cubic3& a, const Cubic3& b) {
    int nv = a[0].nvars();
    std::array<Poly, 5> full{Poly(nv), Poly(nv), Poly(nv), Poly(nv), Poly(nv)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) full[i + j] = full[i + j] + a[i] * b[j];
    return {full[0] + full[3] * Int(275), full[1] + full[4] * Int(275), full[2]};
}

}  // namespace

std::array<Poly, 3> element_equation_relations(const FieldData& cubic, int i) {
    if (i < 0) throw InputError("element_equation_relations: i must be >= 0");
    auto e = eps_power_coeffs(cubic);
    const int nv = 3;
    Cubic3 g{Poly::var(nv, 0), Poly::var(nv, 1), Poly::var(nv, 2)};
    Cubic3 r = mul_mod_theta(g, g);
    Cubic3 eps{Poly::constant(nv, e[0]), Poly::constant(nv, e[1]), Poly::constant(nv, e[2])};
    for (int k = 0; k < i; ++k) r = mul_mod_theta(r, eps);
    return r;
}

namespace {

Poly uvw(std::initializer_list<std::pair<std::array<int, 3>, long>> terms) {
    Poly p(3);
    for (const auto& [m, c] : terms) p.add_term({m[0], m[1], m[2]}, c);
    return p;
}

}  // namespace

std::array<Poly, 3> printed_relations(int i) {
    if (i == 0) {
        return {uvw({{{2, 0, 0}, 1}, {{0, 1, 1}, 550}}),
                uvw({{{1, 1, 0}, 2}, {{0, 0, 2}, 275}}),
                uvw({{{0, 2, 0}, 1}, {{1, 0, 1}, 2}})};
    }
    if (i == 1) {
        return {uvw({{{2, 0, 0}, 1}, {{1, 1, 0}, -28600}, {{1, 0, 1}, 185900}, {{0, 2, 0}, 92950},
                     {{0, 0, 2}, -3932500}, {{0, 1, 1}, 550}}),
                uvw({{{2, 0, 0}, 338}, {{1, 1, 0}, 2}, {{1, 0, 1}, -28600}, {{0, 2, 0}, -14300},
                     {{0, 0, 2}, 275}, {{0, 1, 1}, 185900}}),
                uvw({{{2, 0, 0}, -52}, {{1, 1, 0}, 676}, {{1, 0, 1}, 2}, {{0, 2, 0}, 1}, {{0, 0, 2}, 92950},
                     {{0, 1, 1}, -28600}})};
    }
    throw InputError("printed_relations: i must be 0 or 1");
}

namespace {

// ord_p of n mod p^k, k when n == 0 mod p^k.
long ord_mod(const Int& n, long p, long k) {
    Int m = mod(n, ipow(p, k));
    if (m == 0) return k;
    return valuation(m, Int(p));
}

}  // namespace

CaseI0Report case_i0_reduce(const FieldData& cubic, long c, long d) {
    if (c < 1 || d < 1 || c % 2 == 0 || d % 2 == 0) throw InputError("case_i0_reduce: c and d must be positive and odd");
    CaseI0Report rep;
    rep.c = c;
    rep.d = d;

    auto rel = element_equation_relations(cubic, 0);
    // Variables (v1, v2).
    const int nv = 2;
    Poly v1 = Poly::var(nv, 0), v2 = Poly::var(nv, 1);
    rep.parametrization_kills_coeff2 = true;
    rep.coeff1_factorization = true;
    for (int s : {1, -1}) {
        Poly u = v1 * v1 * Int(2 * s), w = v2 * v2 * Int(-s), v = v1 * v2 * Int(2);
        std::vector<Poly> sub{u, v, w};
        rep.parametrization_kills_coeff2 = rep.parametrization_kills_coeff2 && rel[2].substitute(sub).is_zero();
        Poly expect = v2.pow(4) * Int(275) + v1.pow(3) * v2 * Int(8 * s);
        rep.coeff1_factorization = rep.coeff1_factorization && rel[1].substitute(sub) == expect;
    }

    // With 5 not dividing v2 the 5-adic order of v2((2s v1)^3 + 275 v2^3) is
    // 0 or 2, never the odd c.
    rep.five_divides_v2 = true;
    for (long a = 0; a < 125 && rep.five_divides_v2; ++a) {
        for (long b = 0; b < 125; ++b) {
            if (b % 5 == 0) continue;
            for (int s : {1, -1}) {
                Int e = Int(b) * (ipow(2 * s * a, 3) + 275 * ipow(b, 3));
                long o = ord_mod(e, 5, 3);
                if (o % 2 == 1 || o >= 3) rep.five_divides_v2 = false;
            }
        }
    }
    // With 11 not dividing v2 the 11-adic order is at most 1.
    rep.eleven_branch_forces_d1 = true;
    for (long a = 0; a < 121 && rep.eleven_branch_forces_d1; ++a) {
        for (long b = 0; b < 121; ++b) {
            if (b % 11 == 0) continue;
            for (int s : {1, -1}) {
                Int e = Int(b) * (ipow(2 * s * a, 3) + 275 * ipow(b, 3));
                if (ord_mod(e, 11, 2) > 1) rep.eleven_branch_forces_d1 = false;
            }
        }
    }

    CubicForm f{1, 0, 0, 275};
    Int n = ipow(5, c) * ipow(11, d);
    rep.instances.push_back({f, {1, -1}, "X = 2 s v1, Y = v2 = +-" + n.get_str(), "11 | v2"});
    if (d == 1) {
        rep.instances.push_back(
            {f, {-11, 11}, "X = 2 s v1, Y = v2 = +-" + ipow(5, c).get_str(), "11 | v1, d = 1"});
    }
    return rep;
}

Int i1_system_determinant() { return Int(52) * -46475 - Int(-2199) * 1099; }

I1Triple case_i1_system_solve(const FieldData& cubic, const Int& X, const Int& Y, int s, int sign) {
    if ((s != 1 && s != -1) || (sign != 1 && sign != -1)) throw InputError("case_i1_system_solve: signs must be +-1");
    if (i1_system_determinant() != 1) throw MathMismatch("case_i1_system_solve: determinant is not 1");
    I1Triple t;
    Int p = s * X * X, q = 2 * s * Y * Y;
    // [[52, -2199], [1099, -46475]]^-1 = [[-46475, 2199], [-1099, 52]].
    t.u = -46475 * p + 2199 * q;
    t.w = -1099 * p + 52 * q;
    t.v = 2 * sign * X * Y - 338 * t.u + 14300 * t.w;
    auto rel = element_equation_relations(cubic, 1);
    t.satisfies_coeff2 = rel[2].evaluate({t.u, t.v, t.w}) == 0;
    return t;
}

const QuarticForm& printed_quartic_form() {
    static const QuarticForm f{150975, 185900, 85800, 17592, 1352};
    return f;
}

Int eval_quartic(const QuarticForm& f, const Int& X, const Int& Y) {
    Int r = 0;
    for (int k = 0; k <= 4; ++k) {
        r += f[k] * ipow(X, static_cast<unsigned long>(4 - k)) * ipow(Y, static_cast<unsigned long>(k));
    }
    return r;
}

QuarticDerivation derive_quartic_form(const FieldData& cubic) {
    auto rel = element_equation_relations(cubic, 1);
    const int nv = 2;
    Poly X = Poly::var(nv, 0), Y = Poly::var(nv, 1);
    QuarticDerivation out;
    bool have_form = false;
    for (int s : {1, -1}) {
        for (int sign : {1, -1}) {
            Poly p = X * X * Int(s), q = Y * Y * Int(2 * s);
            Poly u = p * Int(-46475) + q * Int(2199);
            Poly w = p * Int(-1099) + q * Int(52);
            Poly v = X * Y * Int(2 * sign) - u * Int(338) + w * Int(14300);
            if (!rel[2].substitute({u, v, w}).is_zero()) {
                throw MathMismatch("derive_quartic_form: the i = 1 parametrization does not kill coeff2");
            }
            Poly form = -rel[1].substitute({u, v, w});
            // Orient so that the X^3 Y coefficient is positive.
            QuarticForm f;
            for (int k = 0; k <= 4; ++k) f[k] = form.coeff({4 - k, k});
            if (f[1] < 0) {
                f[1] = -f[1];
                f[3] = -f[3];
            }
            Poly rebuilt(nv);
            for (int k = 0; k <= 4; ++k) rebuilt.add_term({4 - k, k}, form.coeff({4 - k, k}));
            if (!(rebuilt == form)) throw MathMismatch("derive_quartic_form: not a binary quartic");
            if (!have_form) {
                out.form = f;
                have_form = true;
            } else if (f != out.form) {
                throw MathMismatch("derive_quartic_form: branches disagree up to X -> -X");
            }
            out.branches.push_back({{s, sign}, form});
        }
    }
    if (out.form != printed_quartic_form()) throw MathMismatch("derive_quartic_form: differs from the printed form");
    return out;
}

const QuarticForm& tm2_form() {
    static const QuarticForm f{1, 4398, 7250100, 5309489900, Int("1457454977550")};
    return f;
}

TmTransform transform_tm(const Int& X, const Int& Y) {
    TmTransform t;
    t.x = 338 * Y;
    t.y = X;
    t.tm1 = eval_quartic(printed_quartic_form(), X, Y);
    t.tm2 = eval_quartic(tm2_form(), t.x, t.y);
    t.identity_holds = t.tm2 == 2 * ipow(13, 6) * t.tm1;
    return t;
}

}  // namespace lns
