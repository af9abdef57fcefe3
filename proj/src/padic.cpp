#include "lns/padic.hpp"

#include "lns/error.hpp"
#include "lns/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lns {

PadicInt::PadicInt(Int p, long prec, const Int& value) : p_(std::move(p)), prec_(prec) {
    if (prec_ < 0) throw PrecisionError("negative p-adic precision");
    value_ = mod(value, ipow(p_, static_cast<unsigned long>(prec_)));
}

PadicInt PadicInt::from_rational(const Rat& x, const Int& p, long prec) {
    if (x.get_den() % p == 0) throw DomainError("rational " + to_string(x) + " is not p-integral");
    return PadicInt(p, prec, rat_mod(x, ipow(p, static_cast<unsigned long>(prec))));
}

long PadicInt::valuation() const {
    if (value_ == 0) return prec_;
    return lns::valuation(value_, p_);
}

PadicInt PadicInt::operator+(const PadicInt& o) const { return PadicInt(p_, std::min(prec_, o.prec_), value_ + o.value_); }
PadicInt PadicInt::operator-(const PadicInt& o) const { return PadicInt(p_, std::min(prec_, o.prec_), value_ - o.value_); }
PadicInt PadicInt::operator-() const { return PadicInt(p_, prec_, -value_); }
PadicInt PadicInt::operator*(const PadicInt& o) const { return PadicInt(p_, std::min(prec_, o.prec_), value_ * o.value_); }

PadicInt PadicInt::divide(const PadicInt& d) const {
    const long k = d.valuation();
    if (k >= d.prec_) throw PrecisionError("division by a p-adic zero");
    if (!is_zero() && valuation() < k) throw DomainError("p-adic quotient is not integral");
    const long prec = std::min(prec_, d.prec_) - k;
    if (prec <= 0) throw PrecisionError("p-adic division exhausted the precision");
    const Int pk = ipow(p_, static_cast<unsigned long>(k));
    const Int m = ipow(p_, static_cast<unsigned long>(prec));
    const Int num = value_ / pk;
    const Int unit = d.value_ / pk;
    return PadicInt(p_, prec, num * inverse_mod(unit, m));
}

PadicInt PadicInt::pow(unsigned long k) const {
    return PadicInt(p_, prec_, power_mod(value_, Int(static_cast<long>(k)), ipow(p_, static_cast<unsigned long>(prec_))));
}

PadicInt PadicInt::with_prec(long prec) const {
    if (prec > prec_) throw PrecisionError("cannot raise p-adic precision");
    return PadicInt(p_, prec, value_);
}

std::vector<unsigned long> PadicInt::digits(std::size_t count) const {
    if (static_cast<long>(count) > prec_) throw PrecisionError("digits requested beyond precision");
    return padic_digits(value_, p_, count);
}

std::string PadicInt::digit_string(std::size_t count) const { return lns::digit_string(digits(count)); }

long ordp(const Rat& x, const Int& p) { return valuation(x, p); }

namespace {

Int eval_mod(const std::vector<Int>& g, const Int& x, const Int& m) {
    Int acc = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = mod(acc * x + *it, m);
    return acc;
}

std::vector<Int> derivative(const std::vector<Int>& g) {
    std::vector<Int> d;
    for (std::size_t i = 1; i < g.size(); ++i) d.push_back(g[i] * static_cast<unsigned long>(i));
    return d;
}

}  // namespace

std::vector<PadicInt> hensel_roots(const std::vector<Int>& g, const Int& p, long prec) {
    if (p < 2 || !is_prime(p)) throw InputError("hensel_roots needs a prime");
    if (!p.fits_slong_p() || p > 100000) throw InputError("hensel_roots scans residues; prime too large");
    const auto dg = derivative(g);
    const Int full = ipow(p, static_cast<unsigned long>(prec));
    std::vector<PadicInt> out;
    for (long r = 0; r < p.get_si(); ++r) {
        if (eval_mod(g, r, p) != 0 || eval_mod(dg, r, p) == 0) continue;
        Int x = r;
        for (long k = 1; k < prec;) {
            k = std::min(prec, 2 * k);
            const Int m = ipow(p, static_cast<unsigned long>(k));
            x = mod(x - eval_mod(g, x, m) * inverse_mod(eval_mod(dg, x, m), m), m);
        }
        if (eval_mod(g, x, full) != 0) throw PrecisionError("Hensel lift failed to converge");
        out.emplace_back(p, prec, x);
    }
    return out;
}

QpFactorization factor_over_qp(const std::vector<Int>& g, const Int& p, long prec) {
    if (g.size() != 5 || g.back() != 1) throw InputError("factor_over_qp expects a monic quartic");
    const auto roots = hensel_roots(g, p, prec);
    if (roots.size() != 1)
        throw DomainError("expected exactly one simple root in Z_" + to_string(p) + ", found " +
                          std::to_string(roots.size()));
    const Int m = ipow(p, static_cast<unsigned long>(prec));
    const Int& r = roots[0].value();
    // Synthetic division by (t - r).
    std::vector<Int> q(4);
    q[3] = 1;
    for (int k = 3; k >= 1; --k) q[k - 1] = mod(g[k] + r * q[k], m);
    if (mod(g[0] + r * q[0], m) != 0) throw PrecisionError("root does not divide the quartic");
    QpFactorization f;
    f.root = roots[0];
    f.linear = {-roots[0], PadicInt(p, prec, 1)};
    for (const auto& c : q) f.cubic.emplace_back(p, prec, c);
    return f;
}

namespace {

long vp_small(long i, const Int& p) {
    long e = 0;
    Int n = i;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

long log_threshold(long prec) { return std::max(2L, static_cast<long>(std::sqrt(static_cast<double>(prec)))); }

}  // namespace

PadicInt padic_log(const PadicInt& x) {
    const Int& p = x.p();
    if (x.valuation() != 0) throw DomainError("p-adic log needs a unit");
    PadicInt y = x.pow(p.get_ui() - 1);
    const PadicInt one(p, x.prec(), 1);
    const long t = log_threshold(x.prec());
    long s = 0;
    while ((y - one).valuation() < t) {
        y = y.pow(p.get_ui());
        ++s;
    }
    const PadicInt z = y - one;
    const long vz = z.valuation();
    const long prec = z.prec();
    PadicInt sum(p, prec, 0);
    PadicInt zi = z;
    for (long i = 1; i * vz - vp_small(i, p) < prec + 1; ++i) {
        const PadicInt term = zi.divide(PadicInt(p, prec, i));
        sum = (i % 2 == 1) ? sum + term : sum - term;
        zi = zi * z;
    }
    const Int scale = ipow(p, static_cast<unsigned long>(s)) * (p - 1);
    return sum.divide(PadicInt(p, sum.prec(), scale));
}

TowerElem::TowerElem(std::shared_ptr<const TowerField> field, Coords c, long prec)
    : field_(std::move(field)), c_(std::move(c)), prec_(prec) {
    if (!field_) throw InputError("tower element without a field");
    if (prec_ > field_->prec) prec_ = field_->prec;
    if (prec_ <= 0) throw PrecisionError("tower element has no significant digits");
    const Int m = ipow(field_->p, static_cast<unsigned long>(prec_));
    for (auto& v : c_) v = mod(v, m);
}

TowerElem TowerElem::scalar(std::shared_ptr<const TowerField> field, const Int& a) {
    Coords c{};
    c[0] = a;
    const long prec = field->prec;
    return TowerElem(std::move(field), c, prec);
}

TowerElem TowerElem::scalar(std::shared_ptr<const TowerField> field, const PadicInt& a) {
    Coords c{};
    c[0] = a.value();
    return TowerElem(std::move(field), c, a.prec());
}

TowerElem TowerElem::basis(std::shared_ptr<const TowerField> field, std::size_t index) {
    if (index >= kDim) throw InputError("tower basis index out of range");
    Coords c{};
    c[index] = 1;
    const long prec = field->prec;
    return TowerElem(std::move(field), c, prec);
}

PadicInt TowerElem::coord_padic(std::size_t i) const { return PadicInt(field_->p, prec_, c_.at(i)); }

bool TowerElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
    Coords c;
    for (std::size_t i = 0; i < kDim; ++i) c[i] = c_[i] + o.c_[i];
    return TowerElem(field_, c, std::min(prec_, o.prec_));
}

TowerElem TowerElem::operator-(const TowerElem& o) const {
    Coords c;
    for (std::size_t i = 0; i < kDim; ++i) c[i] = c_[i] - o.c_[i];
    return TowerElem(field_, c, std::min(prec_, o.prec_));
}

TowerElem TowerElem::operator-() const {
    Coords c;
    for (std::size_t i = 0; i < kDim; ++i) c[i] = -c_[i];
    return TowerElem(field_, c, prec_);
}

TowerElem TowerElem::operator*(const Int& k) const {
    Coords c;
    for (std::size_t i = 0; i < kDim; ++i) c[i] = c_[i] * k;
    return TowerElem(field_, c, prec_);
}

namespace {

struct KElem {
    Int a, b;  // a + b u
};

KElem kmul(const KElem& x, const KElem& y, const TowerField& f) {
    const Int bb = x.b * y.b;
    return {x.a * y.a - bb * f.u_c, x.a * y.b + x.b * y.a - bb * f.u_b};
}

}  // namespace

TowerElem tower_mul(const TowerElem& x, const TowerElem& y) {
    const TowerField& f = *x.field();
    const long prec = std::min(x.prec(), y.prec());
    const Int m = ipow(f.p, static_cast<unsigned long>(prec));
    std::array<KElem, 3> X, Y;
    for (std::size_t b = 0; b < 3; ++b) {
        X[b] = {x.coord(2 * b), x.coord(2 * b + 1)};
        Y[b] = {y.coord(2 * b), y.coord(2 * b + 1)};
    }
    std::array<KElem, 5> P{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const KElem t = kmul(X[i], Y[j], f);
            P[i + j].a += t.a;
            P[i + j].b += t.b;
        }
    for (std::size_t d = 4; d >= 3; --d) {
        const KElem t{mod(P[d].a, m), mod(P[d].b, m)};
        for (std::size_t k = 0; k < 3; ++k) {
            P[d - 3 + k].a -= t.a * f.w_poly[k];
            P[d - 3 + k].b -= t.b * f.w_poly[k];
        }
        P[d] = {};
    }
    TowerElem::Coords c;
    for (std::size_t b = 0; b < 3; ++b) {
        c[2 * b] = P[b].a;
        c[2 * b + 1] = P[b].b;
    }
    return TowerElem(x.field(), c, prec);
}

TowerElem TowerElem::operator*(const TowerElem& o) const { return tower_mul(*this, o); }

TowerElem TowerElem::pow(unsigned long k) const {
    TowerElem result = scalar(field_, Int(1)).with_prec(prec_);
    TowerElem base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

TowerElem TowerElem::with_prec(long prec) const {
    if (prec > prec_) throw PrecisionError("cannot raise tower precision");
    return TowerElem(field_, c_, prec);
}

TowerElem TowerElem::div_int(const Int& d) const {
    if (d == 0) throw DomainError("division by zero");
    const Int& p = field_->p;
    const long k = lns::valuation(d, p);
    for (const auto& v : c_)
        if (v != 0 && lns::valuation(v, p) < k) throw DomainError("tower quotient by an integer is not integral");
    const long prec = prec_ - k;
    if (prec <= 0) throw PrecisionError("tower division exhausted the precision");
    const Int pk = ipow(p, static_cast<unsigned long>(k));
    const Int m = ipow(p, static_cast<unsigned long>(prec));
    const Int inv = inverse_mod(d / pk, m);
    Coords c;
    for (std::size_t i = 0; i < kDim; ++i) c[i] = (c_[i] / pk) * inv;
    return TowerElem(field_, c, prec);
}

std::vector<std::vector<Int>> TowerElem::mult_matrix() const {
    std::vector<std::vector<Int>> m(kDim, std::vector<Int>(kDim));
    for (std::size_t j = 0; j < kDim; ++j) {
        const TowerElem col = *this * basis(field_, j);
        for (std::size_t i = 0; i < kDim; ++i) m[i][j] = col.coord(i);
    }
    return m;
}

TowerElem TowerElem::divide(const TowerElem& d) const {
    const long prec = std::min(prec_, d.prec_);
    std::vector<Int> rhs(c_.begin(), c_.end());
    const PadicSolve sol = solve_padic(d.with_prec(prec).mult_matrix(), rhs, field_->p, prec);
    Coords c;
    std::copy(sol.x.begin(), sol.x.end(), c.begin());
    return TowerElem(field_, c, prec - sol.loss);
}

Rat TowerElem::valuation() const {
    const Int& p = field_->p;
    Rat best = prec_;
    for (std::size_t b = 0; b < 3; ++b) {
        long m = prec_;
        for (std::size_t k = 0; k < 2; ++k)
            if (c_[2 * b + k] != 0) m = std::min(m, lns::valuation(c_[2 * b + k], p));
        if (m == prec_) continue;
        const Rat v = Rat(m) + Rat(static_cast<long>(b), field_->ramification);
        if (v < best) best = v;
    }
    best.canonicalize();
    return best;
}

std::string TowerElem::debug_string(std::size_t digits) const {
    static const char* names[] = {"", "u", "w", "uw", "w^2", "uw^2"};
    std::ostringstream os;
    for (std::size_t i = 0; i < kDim; ++i) {
        if (i) os << " + ";
        os << '(' << lns::digit_string(padic_digits(c_[i], field_->p, digits)) << ')' << names[i];
    }
    return os.str();
}

bool operator==(const TowerElem& a, const TowerElem& b) {
    const long prec = std::min(a.prec_, b.prec_);
    const Int m = ipow(a.field_->p, static_cast<unsigned long>(prec));
    for (std::size_t i = 0; i < TowerElem::kDim; ++i)
        if (mod(a.c_[i] - b.c_[i], m) != 0) return false;
    return true;
}

namespace {

struct Elimination {
    std::vector<std::vector<Int>> a;
    std::vector<Int> b;
    std::vector<std::size_t> colperm;
    std::vector<long> pivot_val;
};

Elimination eliminate(std::vector<std::vector<Int>> a, std::vector<Int> b, const Int& p, long prec) {
    const std::size_t n = a.size();
    const Int m = ipow(p, static_cast<unsigned long>(prec));
    Elimination e;
    e.colperm.resize(n);
    std::iota(e.colperm.begin(), e.colperm.end(), 0);
    for (auto& row : a)
        for (auto& v : row) v = mod(v, m);
    for (auto& v : b) v = mod(v, m);
    for (std::size_t k = 0; k < n; ++k) {
        long best = prec;
        std::size_t bi = k, bj = k;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (a[i][j] == 0) continue;
                const long v = valuation(a[i][j], p);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best >= prec) throw PrecisionError("matrix is singular to working precision");
        std::swap(a[k], a[bi]);
        std::swap(b[k], b[bi]);
        if (bj != k) {
            for (auto& row : a) std::swap(row[k], row[bj]);
            std::swap(e.colperm[k], e.colperm[bj]);
        }
        const Int pk = ipow(p, static_cast<unsigned long>(best));
        const Int uinv = inverse_mod(a[k][k] / pk, m);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            const Int f = mod((a[r][k] / pk) * uinv, m);
            for (std::size_t j = k; j < n; ++j) a[r][j] = mod(a[r][j] - f * a[k][j], m);
            b[r] = mod(b[r] - f * b[k], m);
        }
        e.pivot_val.push_back(best);
    }
    e.a = std::move(a);
    e.b = std::move(b);
    return e;
}

}  // namespace

PadicSolve solve_padic(std::vector<std::vector<Int>> a, std::vector<Int> b, const Int& p, long prec) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InputError("solve_padic dimension mismatch");
    Elimination e = eliminate(std::move(a), std::move(b), p, prec);
    const Int m = ipow(p, static_cast<unsigned long>(prec));
    std::vector<Int> x(n);
    PadicSolve out;
    for (std::size_t kk = n; kk-- > 0;) {
        Int num = e.b[kk];
        for (std::size_t j = kk + 1; j < n; ++j) num -= e.a[kk][j] * x[j];
        num = mod(num, m);
        const long v = e.pivot_val[kk];
        const Int pk = ipow(p, static_cast<unsigned long>(v));
        if (num % pk != 0) throw DomainError("p-adic quotient is not integral");
        x[kk] = mod((num / pk) * inverse_mod(e.a[kk][kk] / pk, m), m);
        out.loss = std::max(out.loss, v);
        out.det_valuation += v;
    }
    out.x.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.x[e.colperm[k]] = x[k];
    return out;
}

long det_valuation(std::vector<std::vector<Int>> a, const Int& p, long prec) {
    std::vector<Int> b(a.size());
    const Elimination e = eliminate(std::move(a), std::move(b), p, prec);
    return std::accumulate(e.pivot_val.begin(), e.pivot_val.end(), 0L);
}

Rat tower_ord(const TowerElem& x) {
    Rat r(det_valuation(x.mult_matrix(), x.field()->p, x.prec()), static_cast<long>(TowerElem::kDim));
    r.canonicalize();
    return r;
}

TowerElem padic_log(const TowerElem& x) {
    const TowerField& f = *x.field();
    if (x.valuation() != 0) throw DomainError("p-adic log needs a unit of L_p");
    const unsigned long q = ipow(f.p, static_cast<unsigned long>(f.residue_degree)).get_ui();
    const TowerElem one = TowerElem::scalar(x.field(), Int(1));
    TowerElem y = x.pow(q - 1);
    const Rat t = log_threshold(x.prec());
    long s = 0;
    while ((y - one).valuation() < t) {
        y = y.pow(f.p.get_ui());
        ++s;
    }
    const TowerElem z = y - one;
    const Rat vz = z.valuation();
    const long prec = z.prec();
    TowerElem sum = TowerElem::scalar(x.field(), Int(0)).with_prec(prec);
    TowerElem zi = z;
    for (long i = 1; Rat(i) * vz - vp_small(i, f.p) < prec + 1; ++i) {
        const TowerElem term = zi.div_int(i);
        sum = (i % 2 == 1) ? sum + term : sum - term;
        zi = zi * z;
    }
    return sum.div_int(ipow(f.p, static_cast<unsigned long>(s)) * Int(static_cast<long>(q - 1)));
}

TowerElem eval_poly(const std::vector<Int>& g, const TowerElem& x) {
    TowerElem acc = TowerElem::scalar(x.field(), Int(0)).with_prec(x.prec());
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + TowerElem::scalar(x.field(), *it);
    return acc;
}

namespace {

Int cubic_discriminant(const Int& a, const Int& b, const Int& c) {
    // t^3 + a t^2 + b t + c
    return a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
}

}  // namespace

SplittingField::SplittingField(const std::vector<Int>& g, const Int& p, long target_prec,
                               const std::vector<Int>& u_poly, long guard)
    : g_(g), target_(target_prec) {
    if (target_prec < 1 || guard < 0) throw InputError("invalid p-adic precision");
    if (u_poly.size() != 3 || u_poly[2] != 1) throw InputError("u polynomial must be a monic quadratic");
    const Int disc_u = u_poly[1] * u_poly[1] - 4 * u_poly[0];
    if (p == 2 || legendre(mod(disc_u, p), p) != -1)
        throw DomainError("u polynomial is not irreducible modulo " + to_string(p));

    const long M = target_prec + guard;
    fac_ = factor_over_qp(g, p, M);
    const PadicInt& a0 = fac_.cubic[0];
    const PadicInt& a1 = fac_.cubic[1];
    const PadicInt& a2 = fac_.cubic[2];
    const long v0 = a0.valuation(), v1 = a1.valuation(), v2 = a2.valuation();

    auto field = std::make_shared<TowerField>();
    field->p = p;
    field->u_b = u_poly[1];
    field->u_c = u_poly[0];
    if (v0 == 1 && v1 >= 1 && v2 >= 1) {
        theta2_is_w_ = true;
        field->prec = M;
        field->w_poly = {a0.value(), a1.value(), a2.value()};
    } else if (v0 == 2 && v1 >= 2 && v2 >= 1) {
        // All roots have valuation 2/3; w = p / theta^(2) is Eisenstein.
        const PadicInt pp(p, M, p);
        const PadicInt c0 = pp.pow(3).divide(a0);
        const PadicInt c1 = (pp.pow(2) * a2).divide(a0);
        const PadicInt c2 = (pp * a1).divide(a0);
        field->prec = std::min({c0.prec(), c1.prec(), c2.prec()});
        field->w_poly = {c0.value(), c1.value(), c2.value()};
        if (c0.valuation() != 1 || c1.valuation() < 1 || c2.valuation() < 1)
            throw DomainError("reciprocal cubic is not Eisenstein");
    } else {
        throw DomainError("unsupported Newton polygon for the cubic factor over Q_" + to_string(p));
    }
    field->modulus = ipow(p, static_cast<unsigned long>(field->prec));
    field_ = field;

    const TowerElem w = TowerElem::basis(field_, 2);
    TowerElem theta2;
    if (theta2_is_w_) {
        theta2 = w;
    } else {
        const PadicInt scale = a0.divide(PadicInt(p, M, ipow(p, 2)));
        const TowerElem poly = w * w + w * field->w_poly[2] + TowerElem::scalar(field_, Int(field->w_poly[1]));
        theta2 = -(poly * TowerElem::scalar(field_, scale));
    }

    const Int d = cubic_discriminant(a2.value(), a1.value(), a0.value());
    const PadicInt disc(p, M, d);
    const long vd = disc.valuation();
    if (vd >= M || vd % 2 != 0) throw DomainError("cubic discriminant is not a square times a unit");
    const PadicInt dunit = disc.divide(PadicInt(p, M, ipow(p, static_cast<unsigned long>(vd))));
    const PadicInt ratio = dunit.divide(PadicInt(p, M, disc_u));
    if (legendre(ratio.value(), p) != 1) throw DomainError("cubic discriminant is a square in Q_p");
    Int s = sqrt_mod_prime_power(ratio.value(), p, static_cast<unsigned long>(ratio.prec()));
    if (mod(s, p) > (p - 1) / 2) s = mod(-s, ipow(p, static_cast<unsigned long>(ratio.prec())));
    const Int ph = ipow(p, static_cast<unsigned long>(vd / 2));
    TowerElem::Coords dc{};
    dc[0] = ph * s * u_poly[1];
    dc[1] = 2 * ph * s;
    const TowerElem delta(field_, dc, ratio.prec() + vd / 2);

    const TowerElem a2e = TowerElem::scalar(field_, a2);
    const TowerElem dg2 = theta2 * theta2 * Int(3) + theta2 * a2e * Int(2) + TowerElem::scalar(field_, a1);
    const TowerElem D = delta.divide(dg2);
    const TowerElem S = -a2e - theta2;
    const TowerElem theta3 = (S + D).div_int(2);
    const TowerElem theta4 = (S - D).div_int(2);

    roots_ = {TowerElem::scalar(field_, fac_.root), theta2, theta3, theta4};
    for (std::size_t i = 0; i < 4; ++i) {
        const TowerElem r = eval_poly(g_, roots_[i]);
        if (!r.is_zero() && r.valuation() < Rat(target_))
            throw PrecisionError("root " + std::to_string(i + 1) + " of the quartic is not accurate to the target");
    }
    if (roots_prec() < target_) throw PrecisionError("guard digits insufficient for the target precision");
}

long SplittingField::roots_prec() const {
    long m = roots_[0].prec();
    for (const auto& r : roots_) m = std::min(m, r.prec());
    return m;
}

TowerElem SplittingField::embed_power(const RatVec& power_coeffs, int root_index) const {
    Int den = 1;
    for (const auto& c : power_coeffs) den = lcm(den, Int(c.get_den()));
    const TowerElem& th = root(root_index);
    TowerElem acc = TowerElem::scalar(field_, Int(0)).with_prec(th.prec());
    for (auto it = power_coeffs.rbegin(); it != power_coeffs.rend(); ++it) {
        const Rat scaled = *it * den;
        const Int num = scaled.get_num();
        acc = acc * th + TowerElem::scalar(field_, num);
    }
    return den == 1 ? acc : acc.div_int(den);
}

std::vector<TowerElem> roots_in_tower(const SplittingField& sf) {
    return {sf.roots().begin(), sf.roots().end()};
}

}  // namespace lns
