#include "lns/thue_mahler.hpp"

#include "lns/error.hpp"
#include "lns/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lns {

namespace {

const std::vector<std::string> kGenerators = {"eps1", "eps2", "pi51", "pi111", "pi2",
                                              "pi131", "pi132", "pi52", "pi112"};
// Generator attached to each unknown n1, n2, a1, a2.
const std::array<std::string, 4> kVarGen = {"pi51", "pi111", "eps1", "eps2"};
const std::array<bool, 4> kVarIsN = {true, true, false, false};

Int var_bound(const TmBox& b, int v) {
    if (v == 0) return b.n1;
    if (v == 1) return b.n2;
    return b.A;
}

Int rat_floor(const Rat& q) {
    Int z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return z;
}

Real rmax(const Real& a, const Real& b) { return a < b ? b : a; }
Real rmin(const Real& a, const Real& b) { return b < a ? b : a; }

using Mat2 = std::array<std::array<Real, 2>, 2>;

Mat2 inverse2(const Mat2& m) {
    const Real det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (abs(det) < pow(Real(10), -20)) throw DomainError("regulator submatrix is singular");
    return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

// max over the corners of [0, n1] x [0, n2] of |c + k1 x1 + k2 x2|
Real corner_max(const Real& c, const Real& k1, const Real& k2, const Int& n1, const Int& n2) {
    const Real x1 = to_real(n1), x2 = to_real(n2);
    Real best = abs(c);
    best = rmax(best, abs(c + k1 * x1));
    best = rmax(best, abs(c + k2 * x2));
    best = rmax(best, abs(c + k1 * x1 + k2 * x2));
    return best;
}

}  // namespace

std::string AlphaCase::label() const {
    std::ostringstream os;
    os << "(" << i1 << "," << i2 << "," << j1 << "," << j2 << ")";
    return os.str();
}

std::vector<AlphaCase> alpha_cases(const TMConstants& tm) {
    std::vector<AlphaCase> out;
    for (const auto& [i1, i2] : tm.i_pairs)
        for (int j1 = 0; j1 <= tm.j1_max; ++j1)
            for (int j2 = 0; j2 <= tm.j2_max; ++j2) out.push_back({i1, i2, j1, j2});
    return out;
}

const std::vector<std::string>& tm_generators() { return kGenerators; }

std::vector<long> alpha_exponents(const AlphaCase& c) {
    return {0, 0, 0, 0, 1, c.i1, c.i2, c.j1, c.j2};
}

const char* var_name(int v) {
    static const char* names[] = {"n1", "n2", "a1", "a2"};
    if (v < 0 || v > 3) return "?";
    return names[v];
}

Int lattice_weight(const Int& K, const Int& N) {
    if (N <= 0) throw InputError("lattice weight needs a positive N");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), K.get_mpz_t(), N.get_mpz_t());
    if (q < 1) return Int(1);
    const std::string s = q.get_str();
    Int lead(s.substr(0, 1));
    const Int scale = ipow(10, static_cast<unsigned long>(s.size() - 1));
    if (lead * scale < q) lead += 1;
    return lead * scale;
}

// ---------------------------------------------------------------------------

struct ThueMahlerReducer::PadicContext {
    long p = 0;
    std::unique_ptr<SplittingField> sf;
    std::map<std::string, TowerElem> ratio_log;        // log_p(G^(3) / G^(2))
    std::map<std::string, std::array<Rat, 3>> ord;     // ord_p G^(1), G^(2), G^(3)
    TowerElem theta_log;                                // log_p((t1 - t2) / (t1 - t3))
    Rat theta_ord;                                      // ord_p(t3 - t2) - ord_p(t1 - t3)
};

struct ThueMahlerReducer::RealContext {
    long digits = 0;
    std::array<Cplx, 4> th;
    std::map<std::string, std::array<Real, 4>> logabs;
    std::map<std::string, Real> arg43;  // Arg(G^(4) / G^(3))
};

ThueMahlerReducer::ThueMahlerReducer(const Config& cfg) : cfg_(cfg), cases_(alpha_cases(cfg.tm)) {
    const FieldData& K = cfg_.quartic;
    for (long p : {5L, 11L}) {
        const PadicSetup& setup = cfg_.padic_setup(p);
        auto ctx = std::make_unique<PadicContext>();
        ctx->p = p;
        ctx->sf = std::make_unique<SplittingField>(K.defining_poly, setup.p, setup.precision, setup.u_poly);
        const SplittingField& sf = *ctx->sf;
        for (const auto& g : kGenerators) {
            const RatVec pb = elem_to_power_basis(K.element(g), K);
            std::array<TowerElem, 3> emb;
            for (int i = 0; i < 3; ++i) emb[i] = sf.embed_power(pb, i + 1);
            ctx->ord[g] = {tower_ord(emb[0]), tower_ord(emb[1]), tower_ord(emb[2])};
            const TowerElem ratio = emb[2].divide(emb[1]);
            ctx->ratio_log[g] = padic_log(ratio);
        }
        const TowerElem d12 = sf.root(1) - sf.root(2);
        const TowerElem d13 = sf.root(1) - sf.root(3);
        ctx->theta_log = padic_log(d12.divide(d13));
        ctx->theta_ord = tower_ord(sf.root(3) - sf.root(2)) - tower_ord(d13);
        padic_[p] = std::move(ctx);
    }
}

ThueMahlerReducer::~ThueMahlerReducer() = default;

const ThueMahlerReducer::PadicContext& ThueMahlerReducer::padic_context(long p) const {
    auto it = padic_.find(p);
    if (it == padic_.end()) throw InputError("no p-adic context for p = " + std::to_string(p));
    return *it->second;
}

const ThueMahlerReducer::RealContext& ThueMahlerReducer::real_context(long digits) const {
    const long work = std::max<long>(digits + 30, cfg_.tm.real_working_digits);
    if (!real_.empty()) {
        auto& best = real_.rbegin()->second;
        if (best->digits >= work) return *best;
    }
    PrecisionGuard guard(static_cast<unsigned>(work));
    auto ctx = std::make_unique<RealContext>();
    ctx->digits = work;
    const FieldData& K = cfg_.quartic;
    ctx->th = quartic_roots(K.defining_poly);
    for (const auto& g : kGenerators) {
        const RatVec pb = elem_to_power_basis(K.element(g), K);
        std::array<Real, 4> la;
        Cplx g3{};
        for (int i = 0; i < 4; ++i) {
            const Cplx v = eval_rat_poly(pb, ctx->th[i]);
            la[i] = log(v.abs());
            if (i == 2) g3 = v;
        }
        ctx->logabs[g] = la;
        ctx->arg43[g] = principal_angle(-2 * g3.arg());
    }
    auto& slot = real_[work];
    slot = std::move(ctx);
    return *slot;
}

TmBox ThueMahlerReducer::initial_box() const { return {cfg_.tm.N0_ceil, cfg_.tm.N0_ceil, cfg_.tm.K0_ceil}; }

// ---------------------------------------------------------------------------
// p-adic reduction

std::array<std::array<PadicInt, 5>, 6> ThueMahlerReducer::padic_form_coefficients(long p,
                                                                                   const AlphaCase& alpha) const {
    const PadicContext& ctx = padic_context(p);
    const auto ex = alpha_exponents(alpha);
    TowerElem l0 = ctx.theta_log;
    for (std::size_t g = 0; g < kGenerators.size(); ++g)
        if (ex[g] != 0) l0 = l0 + ctx.ratio_log.at(kGenerators[g]) * Int(ex[g]);
    std::array<TowerElem, 5> elems = {l0, ctx.ratio_log.at(kVarGen[0]), ctx.ratio_log.at(kVarGen[1]),
                                      ctx.ratio_log.at(kVarGen[2]), ctx.ratio_log.at(kVarGen[3])};
    std::array<std::array<PadicInt, 5>, 6> out;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 5; ++j) out[i][j] = elems[j].coord_padic(i);
    return out;
}

PadicCaseResult ThueMahlerReducer::padic_case(long p, long m, const AlphaCase& alpha, const TmBox& box,
                                              const Int& weight) const {
    const PadicContext& ctx = padic_context(p);
    const int pvar = p == 5 ? 0 : 1;
    PadicCaseResult res;
    res.alpha = alpha;

    // ord_p(lambda) = theta_ord + ord alpha^(1) - ord alpha^(2) + sum_v var * (ord G_v^(1) - ord G_v^(2))
    const auto ex = alpha_exponents(alpha);
    Rat c0 = ctx.theta_ord;
    for (std::size_t g = 0; g < kGenerators.size(); ++g) {
        const auto& o = ctx.ord.at(kGenerators[g]);
        c0 += Rat(ex[g]) * (o[0] - o[1]);
    }
    for (int v = 0; v < 4; ++v) {
        const auto& o = ctx.ord.at(kVarGen[v]);
        const Rat slope = o[0] - o[1];
        if (slope != (v == pvar ? 1 : 0))
            throw DataIntegrityError("unexpected valuation pattern of " + kVarGen[v] + " at p = " + std::to_string(p));
    }
    res.ord_lambda_const = c0;

    const Int P(p);
    const Int pm = ipow(P, static_cast<unsigned long>(m));
    const auto coeffs = padic_form_coefficients(p, alpha);
    // n is at most this when ord_p(lambda) <= 1/(p-1)
    const Int small_n = rat_floor(Rat(1, p - 1) - c0);

    for (int i = 0; i < 6; ++i) {
        const Rat deg(i / 2, 3);
        std::array<long, 5> val;
        for (int j = 0; j < 5; ++j) val[j] = coeffs[i][j].valuation();
        const long vmin = *std::min_element(val.begin() + 1, val.end());
        if (val[0] < vmin) {
            PadicFormResult fr;
            fr.coordinate = i;
            fr.constant_dominates = true;
            fr.divisor_valuation = val[0];
            fr.passed = val[0] < coeffs[i][0].prec();
            fr.n_bound = std::max(rat_floor(Rat(val[0]) + deg - c0), small_n);
            res.forms.push_back(fr);
            continue;
        }
        for (int js = 1; js < 5; ++js) {
            if (val[js] != vmin) continue;
            PadicFormResult fr;
            fr.coordinate = i;
            fr.divided_var = js - 1;
            fr.divisor_valuation = vmin;
            const PadicInt& d = coeffs[i][js];
            std::vector<int> others;
            std::vector<Int> beta;
            for (int v = 0; v < 4; ++v)
                if (v != js - 1) others.push_back(v);
            const PadicInt b0 = coeffs[i][0].divide(d);
            if (b0.prec() < m) throw ResourceError("p-adic precision too small for m = " + std::to_string(m));
            for (int v : others) {
                const PadicInt b = coeffs[i][v + 1].divide(d);
                if (b.prec() < m) throw ResourceError("p-adic precision too small for m = " + std::to_string(m));
                beta.push_back(mod(b.value(), pm));
            }
            IntMatrix basis(4, std::vector<Int>(4, 0));
            Rat r_sq = 0;
            for (int l = 0; l < 3; ++l) {
                const Int w = kVarIsN[others[l]] ? weight : Int(1);
                basis[l][l] = w;
                basis[l][3] = beta[l];
                const Int wb = w * var_bound(box, others[l]);
                r_sq += Rat(wb * wb);
            }
            basis[3][3] = pm;
            const Int b4 = var_bound(box, js - 1);
            r_sq += Rat(b4 * b4);
            const std::vector<Int> y = {0, 0, 0, -mod(b0.value(), pm)};
            const ReducedBasis rb = lll_reduce(basis);
            const DistanceBound db = distance_lower_bound(rb, y);
            fr.l_sq = db.l_sq;
            fr.r_sq = r_sq;
            fr.passed = !db.y_in_lattice && db.l_sq > r_sq;
            if (fr.passed) fr.n_bound = std::max(rat_floor(Rat(m - 1 + vmin) + deg - c0), small_n);
            res.forms.push_back(fr);
        }
    }
    for (std::size_t k = 0; k < res.forms.size(); ++k) {
        const auto& fr = res.forms[k];
        if (!fr.passed) continue;
        if (!res.passed || fr.n_bound < res.n_bound) {
            res.passed = true;
            res.n_bound = fr.n_bound;
            res.best_form = static_cast<int>(k);
        }
    }
    if (res.passed && res.n_bound < 0) res.n_bound = 0;
    return res;
}

PadicStepResult ThueMahlerReducer::padic_step(long p, std::optional<long> m, const TmBox& box,
                                              const Int& weight) const {
    auto evaluate = [&](long mm) {
        PadicStepResult r;
        r.p = p;
        r.m = mm;
        r.weight = weight;
        r.passed = true;
        r.rigorous_bound = 0;
        for (const auto& c : cases_) {
            r.cases.push_back(padic_case(p, mm, c, box, weight));
            const auto& cr = r.cases.back();
            if (!cr.passed) {
                r.passed = false;
                break;
            }
            r.rigorous_bound = std::max(r.rigorous_bound, cr.n_bound);
        }
        return r;
    };
    const Int old = p == 5 ? box.n1 : box.n2;
    PadicStepResult res;
    if (m) {
        res = evaluate(*m);
        res.m_from_schedule = true;
    } else {
        // Heuristic start: p^m ~ R^4 / W.
        const Int r2 = weight * weight * box.N() * box.N() + 2 * box.A * box.A + box.N() * box.N();
        const double est = (2.0 * std::log(r2.get_d()) - std::log(weight.get_d())) / std::log(double(p));
        long mm = std::max<long>(1, static_cast<long>(est) - 6);
        const long limit = cfg_.padic_setup(p).precision - 10;
        for (;; ++mm) {
            if (mm > limit) throw ResourceError("p-adic reduction did not succeed within the working precision");
            res = evaluate(mm);
            if (res.passed) break;
        }
    }
    if (!res.passed) {
        res.rigorous_bound = old;
        res.stated_bound = old;
        return res;
    }
    res.stated_bound = res.rigorous_bound <= res.m + 1 ? Int(res.m + 1) : res.rigorous_bound;
    if (res.stated_bound > old) res.stated_bound = old;
    return res;
}

// ---------------------------------------------------------------------------
// Real reduction

std::array<Real, 5> ThueMahlerReducer::real_form_coefficients(const AlphaCase& alpha, int i0, long digits) const {
    const RealContext& ctx = real_context(digits);
    PrecisionGuard guard(static_cast<unsigned>(ctx.digits));
    const auto ex = alpha_exponents(alpha);
    Real rho = 2 * (ctx.th[i0 - 1] - ctx.th[2]).arg();
    for (std::size_t g = 0; g < kGenerators.size(); ++g)
        if (ex[g] != 0) rho += Real(ex[g]) * ctx.arg43.at(kGenerators[g]);
    return {principal_angle(rho), ctx.arg43.at("pi51"), ctx.arg43.at("pi111"), ctx.arg43.at("eps1"),
            ctx.arg43.at("eps2")};
}

namespace {

struct UnitSystem {
    Mat2 uinv;
    std::array<Real, 2> s;   // uinv * (1, 1)
    Mat2 M;                  // uinv * P_I
};

UnitSystem unit_system(const std::map<std::string, std::array<Real, 4>>& la, int r0, int r1) {
    Mat2 u = {{{la.at("eps1")[r0], la.at("eps2")[r0]}, {la.at("eps1")[r1], la.at("eps2")[r1]}}};
    UnitSystem us;
    us.uinv = inverse2(u);
    for (int r = 0; r < 2; ++r) {
        us.s[r] = us.uinv[r][0] + us.uinv[r][1];
        us.M[r][0] = us.uinv[r][0] * la.at("pi51")[r0] + us.uinv[r][1] * la.at("pi51")[r1];
        us.M[r][1] = us.uinv[r][0] * la.at("pi111")[r0] + us.uinv[r][1] * la.at("pi111")[r1];
    }
    return us;
}

}  // namespace

RealCaseResult ThueMahlerReducer::real_case(long digits, const AlphaCase& alpha, int i0, const TmBox& box,
                                            const Int& weight) const {
    const RealContext& ctx = real_context(digits);
    PrecisionGuard guard(static_cast<unsigned>(ctx.digits));
    RealCaseResult res;
    res.alpha = alpha;
    res.i0 = i0;
    res.digits = digits;

    const auto ex = alpha_exponents(alpha);
    std::array<Real, 4> kappa{};
    for (std::size_t g = 0; g < kGenerators.size(); ++g)
        for (int i = 0; i < 4; ++i) kappa[i] += Real(ex[g]) * ctx.logabs.at(kGenerators[g])[i];
    const Real log_norm_alpha = kappa[0] + kappa[1] + kappa[2] + kappa[3];
    const Real log5 = log(Real(5)), log11 = log(Real(11)), log2 = log(Real(2));
    const auto& th = ctx.th;

    // Balanced case: every conjugate of x - theta y is within a bounded factor of the smallest.
    {
        Real worst = 0;
        for (int r0 = 0; r0 < 3; ++r0) {
            Real D = r0 == 2 ? (th[2] - th[3]).abs() : Real(1e300);
            if (r0 < 2)
                for (int i = 0; i < 4; ++i)
                    if (i != r0) D = rmin(D, (th[i] - th[r0]).abs());
            std::array<Real, 4> gam{};
            Real gsum = 0;
            for (int i = 0; i < 4; ++i) {
                if (i == r0) continue;
                gam[i] = log(2 * (th[i] - th[r0]).abs() / D + 1);
                gsum += gam[i];
            }
            std::array<Real, 4> E;
            for (int i = 0; i < 4; ++i) E[i] = rmax(gam[i], gsum / 4);
            Real best = Real(1e300);
            for (const auto& [a, b] : std::array<std::pair<int, int>, 3>{{{0, 1}, {0, 2}, {1, 2}}}) {
                const UnitSystem us = unit_system(ctx.logabs, a, b);
                const std::array<int, 2> I = {a, b};
                Real bound = 0;
                for (int r = 0; r < 2; ++r) {
                    Real c = 0;
                    for (int k = 0; k < 2; ++k) c += us.uinv[r][k] * (log_norm_alpha / 4 - kappa[I[k]]);
                    const Real k1 = us.s[r] * log5 / 4 - us.M[r][0];
                    const Real k2 = us.s[r] * log11 / 4 - us.M[r][1];
                    Real v = corner_max(c, k1, k2, box.n1, box.n2);
                    for (int k = 0; k < 2; ++k) v += abs(us.uinv[r][k]) * E[I[k]];
                    bound = rmax(bound, v);
                }
                best = rmin(best, bound);
            }
            worst = rmax(worst, best);
        }
        res.A_balanced = floor_to_int(worst);
    }

    // Main case: conjugate i0 is much smaller than the others.
    const int a = i0 - 1;
    const int other = a == 0 ? 1 : 0;
    const UnitSystem us = unit_system(ctx.logabs, other, 2);
    const std::array<int, 2> I = {other, 2};
    std::array<Real, 2> B;
    for (int r = 0; r < 2; ++r) {
        Real c = 0;
        for (int k = 0; k < 2; ++k) c += us.uinv[r][k] * (log((th[a] - th[I[k]]).abs()) - kappa[I[k]]);
        B[r] = corner_max(c, -us.M[r][0], -us.M[r][1], box.n1, box.n2) +
               log2 * (abs(us.uinv[r][0]) + abs(us.uinv[r][1]));
    }
    Real prod = 1;
    for (int i = 0; i < 4; ++i)
        if (i != a) prod *= (th[a] - th[i]).abs();
    const Real c_lambda = 16 * (th[3] - th[2]).abs() / ((th[a] - th[3]).abs() * (th[a] - th[2]).abs() * prod);
    const Real L0 = log(c_lambda) + log_norm_alpha + to_real(box.n1) * log5 + to_real(box.n2) * log11;
    const Real smax = rmax(abs(us.s[0]), abs(us.s[1]));
    res.c15 = to_double(4 / smax);
    res.log_c21 = to_double(L0 + (4 / smax) * rmax(B[0], B[1]));

    // Lattice
    const auto coef = real_form_coefficients(alpha, i0, digits);
    const Real pi = real_pi();
    const Real C = pow(Real(10), digits);
    const Int phi0 = trunc_to_int(C * coef[0]);
    const Int phi1 = trunc_to_int(C * coef[1]);
    const Int phi2 = trunc_to_int(C * coef[2]);
    const Int psi1 = trunc_to_int(C * coef[3]);
    const Int psi2 = trunc_to_int(C * coef[4]);
    const Int psi3 = trunc_to_int(C * 2 * pi);
    IntMatrix basis(5, std::vector<Int>(5, 0));
    basis[0][0] = weight;
    basis[0][4] = phi1;
    basis[1][1] = weight;
    basis[1][4] = phi2;
    basis[2][2] = 1;
    basis[2][4] = psi1;
    basis[3][3] = 1;
    basis[3][4] = psi2;
    basis[4][4] = psi3;
    const ReducedBasis rb = lll_reduce(basis);
    const DistanceBound db = distance_lower_bound(rb, {0, 0, 0, 0, -phi0});

    const Int a0max = floor_to_int((pi + abs(coef[0]) + abs(coef[1]) * to_real(box.n1) +
                                    abs(coef[2]) * to_real(box.n2) + (abs(coef[3]) + abs(coef[4])) * to_real(box.A)) /
                                   (2 * pi));
    const Int S = weight * weight * (box.n1 * box.n1 + box.n2 * box.n2) + 2 * box.A * box.A;
    const Int T = box.n1 + box.n2 + 2 * box.A + a0max + 1;
    const Real l_sq = to_real(db.l_sq);
    res.l = to_double(sqrt(l_sq));
    res.A_main = box.A;
    if (db.y_in_lattice || db.l_sq <= Rat(S)) return res;
    const Real gap = sqrt(l_sq - to_real(S)) - to_real(T);
    if (gap <= 0) return res;
    res.passed = true;
    const Real X = rmax(log(Real(1.02)) + log(C) - log(gap), log(Real(2.5)));
    Real amax = 0;
    for (int r = 0; r < 2; ++r) amax = rmax(amax, B[r] + abs(us.s[r]) * (L0 + X) / 4);
    res.A_main = floor_to_int(amax);
    return res;
}

RealStepResult ThueMahlerReducer::real_step(std::optional<long> digits, const TmBox& box, const Int& weight) const {
    RealStepResult res;
    res.weight = weight;
    res.passed = true;
    res.A_bound = 0;
    const Int s2 = weight * weight * box.N() * box.N() * 2 + 2 * box.A * box.A;
    const double s_est = std::sqrt(s2.get_d());
    const Int t2 = 2 * box.N() + 4 * box.A;
    const double t_est = t2.get_d();
    const double est = 5 * std::log10(s_est + t_est) - 2 * std::log10(weight.get_d());
    for (const auto& alpha : cases_) {
        for (int i0 : {1, 2}) {
            long d = digits ? *digits : std::max<long>(5, static_cast<long>(est) - 3);
            const long limit = d + 120;
            RealCaseResult rc;
            for (;;) {
                rc = real_case(d, alpha, i0, box, weight);
                if (rc.passed || d >= limit) break;
                d += digits ? 5 : 1;
            }
            if (!rc.passed) res.passed = false;
            res.A_bound = std::max({res.A_bound, rc.A_main, rc.A_balanced});
            res.cases.push_back(rc);
        }
    }
    if (!res.passed || res.A_bound > box.A) res.A_bound = std::min(res.A_bound, box.A);
    return res;
}

ReductionRoundResult ThueMahlerReducer::run_round(int round, const TmBox& in, const ReductionRound& sched) const {
    ReductionRoundResult rr;
    rr.round = round;
    rr.in = in;
    const Int wp = lattice_weight(in.A, in.N());
    auto prec_for = [&](long p) -> std::optional<long> {
        auto it = sched.padic_precision.find(p);
        return it == sched.padic_precision.end() ? std::nullopt : it->second;
    };
    rr.p5 = padic_step(5, prec_for(5), in, wp);
    rr.p11 = padic_step(11, prec_for(11), in, wp);
    TmBox mid{std::min(in.n1, rr.p5.stated_bound), std::min(in.n2, rr.p11.stated_bound), in.A};
    if (sched.merge_n_bounds) mid.n1 = mid.n2 = mid.N();
    rr.real = real_step(sched.real_digits, mid, lattice_weight(in.A, mid.N()));
    rr.out = {mid.n1, mid.n2, std::min(in.A, rr.real.A_bound)};
    return rr;
}

ReductionSummary ThueMahlerReducer::run_all() const {
    ReductionSummary s;
    s.initial = initial_box();
    TmBox box = s.initial;
    s.passed = true;
    int r = 1;
    for (const auto& sched : cfg_.tm.schedule) {
        s.rounds.push_back(run_round(r++, box, sched));
        const auto& rr = s.rounds.back();
        s.passed = s.passed && rr.p5.passed && rr.p11.passed && rr.real.passed;
        box = rr.out;
    }
    s.final = box;
    return s;
}

}  // namespace lns
