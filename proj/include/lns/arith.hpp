#pragma once

// Exact integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lns {

using Int = mpz_class;
using Rat = mpq_class;

Int ipow(const Int& base, unsigned long exp);
Int ipow(long base, unsigned long exp);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);
bool is_square(const Int& n);

// Exact integer cube root if n is a perfect cube, with sign.
bool is_cube(const Int& n, Int* root = nullptr);

Int gcd(const Int& a, const Int& b);

// Exponent of the prime p in n != 0.
long valuation(const Int& n, const Int& p);
// Valuation of a nonzero rational; may be negative.
long valuation(const Rat& x, const Int& p);

// Canonical residue in [0, m).
Int mod(const Int& a, const Int& m);
Int inverse_mod(const Int& a, const Int& m);
Int power_mod(const Int& base, const Int& exp, const Int& m);

// Reduce a rational with denominator prime to m.
Int rat_mod(const Rat& x, const Int& m);

bool is_prime(const Int& n);
int legendre(const Int& a, const Int& p);

// Square root modulo p^k of a unit square residue (p odd), lifted by Newton.
Int sqrt_mod_prime_power(const Int& a, const Int& p, unsigned long k);

// Base-p digits d0, d1, ... of 0 <= n, least significant first.
std::vector<unsigned long> padic_digits(const Int& n, const Int& p, std::size_t count);

// "0.d0d1d2..." with digits >= 10 parenthesised, e.g. "0.052(10)6".
std::string digit_string(const std::vector<unsigned long>& digits);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

// Integer division rounding toward zero.
Int trunc_div(const Int& a, const Int& b);

}  // namespace lns
