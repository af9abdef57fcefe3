#pragma once

// The cubic case: reduction of x^2 + 5^a 11^b = y^3 to the curves
// Y^2 = X^3 - 5^i 11^j, and the descent in Q(theta), theta^3 = 275, that
// turns the exceptional class into Thue and Thue-Mahler equations.

#include "lns/arith.hpp"
#include "lns/numberfield.hpp"
#include "lns/poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace lns {

struct ResidueClass {
    int i = 0, j = 0;
    long A = 0, B = 0;
    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

ResidueClass residue_class_map(long a, long b);

struct CurveData {
    int i = 0, j = 0;
    Int coefficient;  // 5^i 11^j
};

CurveData curve_data(int i, int j);

struct PointCheck {
    bool on_curve = false;
    // Denominators of X and Y are products of 5 and 11 only.
    bool s_unit_denominators = false;
    bool x_numerator_prime_to_55 = false;
    Int x_denominator, y_denominator;
};

PointCheck verify_point_on_curve(const Rat& X, const Rat& Y, const CurveData& c);

// (x, y) with x^2 + 5^a 11^b = y^3 maps to (y / 5^2A 11^2B, x / 5^3A 11^3B).
std::pair<Rat, Rat> solution_to_point(long a, long b, const Int& x, const Int& y);

// Cubic binary form a0 X^3 + a1 X^2 Y + a2 X Y^2 + a3 Y^3.
using CubicForm = std::array<Int, 4>;
Int eval_cubic(const CubicForm& f, const Int& X, const Int& Y);

struct ThueHit {
    Int X, Y, rhs;
    friend bool operator==(const ThueHit&, const ThueHit&) = default;
};

// All |X|, |Y| <= bound with f(X, Y) in rhs_set, sorted by (rhs, X, Y).
std::vector<ThueHit> thue_bounded_search(const CubicForm& f, const std::vector<Int>& rhs_set, long bound);

// Coefficients of 1, theta, theta^2 in eps^i (u + v theta + w theta^2)^2
// modulo theta^3 - 275, as polynomials in (u, v, w).
std::array<Poly, 3> element_equation_relations(const FieldData& cubic, int i);

// The relations as printed, i in {0, 1}; same layout as above.
std::array<Poly, 3> printed_relations(int i);

struct ThueInstance {
    CubicForm form;
    std::vector<Int> rhs;  // the admissible right-hand sides
    std::string substitution;
    std::string branch;
};

struct CaseI0Report {
    long c = 0, d = 0;
    // v^2 + 2uw vanishes under u = 2s v1^2, w = -s v2^2, v = 2 v1 v2.
    bool parametrization_kills_coeff2 = false;
    // 2uv + 275w^2 becomes 275 v2^4 + 8 s v1^3 v2 for both signs s.
    bool coeff1_factorization = false;
    // 5 | v1 forces 5 | v2 once c >= 3; checked over residues mod 5^3.
    bool five_divides_v2 = false;
    // d > 1 together with 11 | v1 forces 11 | v2; checked over residues mod 11^2.
    bool eleven_branch_forces_d1 = false;
    std::vector<ThueInstance> instances;
};

CaseI0Report case_i0_reduce(const FieldData& cubic, long c, long d);

struct I1Triple {
    Int u, v, w;
    bool satisfies_coeff2 = false;
};

// Inverse of [[52, -2199], [1099, -46475]] applied to (sX^2, 2sY^2);
// sign picks the +-2XY branch of the third relation.
I1Triple case_i1_system_solve(const FieldData& cubic, const Int& X, const Int& Y, int s, int sign = 1);
Int i1_system_determinant();

using QuarticForm = std::array<Int, 5>;
const QuarticForm& printed_quartic_form();
Int eval_quartic(const QuarticForm& f, const Int& X, const Int& Y);

struct QuarticDerivation {
    QuarticForm form;
    // -coeff1 after substitution, for each (s, sign) in {+-1}^2, as
    // polynomials in (X, Y).
    std::vector<std::pair<std::array<int, 2>, Poly>> branches;
};

// Substitutes the i = 1 solution into the theta coefficient. Throws
// MathMismatch unless every branch is the form at (+-X, Y) and the form
// equals the printed one.
QuarticDerivation derive_quartic_form(const FieldData& cubic);

const QuarticForm& tm2_form();

struct TmTransform {
    Int x, y;
    Int tm1, tm2;
    bool identity_holds = false;
};

// x = 338 Y, y = X and TM2(x, y) = 2 13^6 TM1(X, Y).
TmTransform transform_tm(const Int& X, const Int& Y);

}  // namespace lns
