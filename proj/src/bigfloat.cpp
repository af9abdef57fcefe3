#include "lns/bigfloat.hpp"

#include "lns/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace lns {

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real to_real(const Int& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Rat& q) { return to_real(Int(q.get_num())) / to_real(Int(q.get_den())); }

Int trunc_to_int(const Real& x) {
    Int z;
    mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDZ);
    return z;
}

Int floor_to_int(const Real& x) {
    Int z;
    mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDD);
    return z;
}

Real real_pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

double to_double(const Real& x) { return x.convert_to<double>(); }

Cplx Cplx::operator/(const Cplx& o) const {
    const Real d = o.re * o.re + o.im * o.im;
    if (d == 0) throw DomainError("complex division by zero");
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

Real Cplx::abs() const { return sqrt(re * re + im * im); }

Real Cplx::arg() const {
    if (re == 0 && im == 0) throw DomainError("argument of zero");
    return atan2(im, re);
}

Cplx cplx(const Real& x) { return {x, Real(0)}; }

Real principal_angle(const Real& x) {
    const Real two_pi = 2 * real_pi();
    Real r = x - two_pi * floor((x + real_pi()) / two_pi);
    if (r <= -real_pi()) r += two_pi;
    if (r > real_pi()) r -= two_pi;
    return r;
}

namespace {

Cplx eval_int_poly(const std::vector<Int>& g, const Cplx& x) {
    Cplx acc{Real(0), Real(0)};
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + cplx(to_real(*it));
    return acc;
}

}  // namespace

Cplx eval_rat_poly(const std::vector<Rat>& coeffs, const Cplx& x) {
    Cplx acc{Real(0), Real(0)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + cplx(to_real(*it));
    return acc;
}

std::array<Cplx, 4> quartic_roots(const std::vector<Int>& g) {
    if (g.size() != 5 || g[4] != 1) throw InputError("quartic_roots expects a monic quartic");
    // Double precision Durand-Kerner for starting points, then Newton at full precision.
    using C = std::complex<double>;
    std::vector<double> cd;
    for (const auto& c : g) cd.push_back(c.get_d());
    auto f = [&](C z) {
        C acc = 0;
        for (int k = 4; k >= 0; --k) acc = acc * z + cd[k];
        return acc;
    };
    const double scale = std::pow(std::abs(cd[0]), 0.25);
    std::array<C, 4> z;
    for (int k = 0; k < 4; ++k) z[k] = scale * std::pow(C(0.4, 0.9), k);
    for (int it = 0; it < 2000; ++it) {
        for (int i = 0; i < 4; ++i) {
            C den = 1;
            for (int j = 0; j < 4; ++j)
                if (j != i) den *= z[i] - z[j];
            z[i] -= f(z[i]) / den;
        }
    }
    std::vector<Int> dg;
    for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * static_cast<unsigned long>(i));
    const Real tol = pow(Real(10), -static_cast<long>(Real::default_precision()) + 5);
    std::array<Cplx, 4> roots;
    for (int i = 0; i < 4; ++i) {
        Cplx x{Real(z[i].real()), Real(z[i].imag())};
        for (int it = 0; it < 200; ++it) {
            const Cplx step = eval_int_poly(g, x) / eval_int_poly(dg, x);
            x = x - step;
            if (step.abs() <= tol * (1 + x.abs())) break;
        }
        roots[i] = x;
    }
    const Real eps = pow(Real(10), -static_cast<long>(Real::default_precision()) / 2);
    std::vector<Real> reals;
    std::vector<Cplx> upper;
    for (const auto& r : roots) {
        if (abs(r.im) <= eps * (1 + r.abs()))
            reals.push_back(r.re);
        else if (r.im > 0)
            upper.push_back(r);
    }
    if (reals.size() != 2 || upper.size() != 1)
        throw DomainError("quartic does not have signature (2,1)");
    std::sort(reals.begin(), reals.end());
    return {cplx(reals[0]), cplx(reals[1]), upper[0], upper[0].conj()};
}

}  // namespace lns
