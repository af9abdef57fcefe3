#pragma once

// Multiprecision reals (MPFR through boost::multiprecision) and the small
// amount of complex arithmetic needed for the archimedean linear forms.

#include "lns/arith.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <vector>

namespace lns {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the default precision (decimal digits) of newly created Reals for the
// lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Int& z);
Real to_real(const Rat& q);
// Rounds toward zero: floor for x >= 0, ceil for x < 0.
Int trunc_to_int(const Real& x);
Int floor_to_int(const Real& x);
Real real_pi();
double to_double(const Real& x);

struct Cplx {
    Real re, im;

    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Cplx operator/(const Cplx& o) const;
    Cplx conj() const { return {re, -im}; }
    Real abs() const;
    // Principal argument in (-pi, pi].
    Real arg() const;
};

Cplx cplx(const Real& x);

// Principal representative of x modulo 2 pi, in (-pi, pi].
Real principal_angle(const Real& x);

// Roots of a real monic quartic: real roots ascending, then the complex pair
// with positive imaginary part first. Requires two real roots and one pair.
std::array<Cplx, 4> quartic_roots(const std::vector<Int>& monic_poly);

Cplx eval_rat_poly(const std::vector<Rat>& coeffs, const Cplx& x);

}  // namespace lns
