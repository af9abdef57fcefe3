#pragma once

// Fixed absolute precision p-adic arithmetic: Z_p, the unramified quadratic
// extension K_p = Q_p(u), and the degree six splitting field L_p = K_p(w) of the
// quartic, where w is a uniformizer (Eisenstein cubic over Z_p). Elements of
// L_p are coordinate vectors over {1, u, w, uw, w^2, uw^2}.

#include "lns/arith.hpp"
#include "lns/numberfield.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace lns {

class PadicInt {
public:
    PadicInt() = default;
    PadicInt(Int p, long prec, const Int& value);

    static PadicInt from_rational(const Rat& x, const Int& p, long prec);

    const Int& p() const { return p_; }
    long prec() const { return prec_; }
    const Int& value() const { return value_; }

    bool is_zero() const { return value_ == 0; }
    // Valuation, or prec() when indistinguishable from zero.
    long valuation() const;

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator-() const;
    PadicInt operator*(const PadicInt& o) const;
    // Exact division; the quotient must be integral. Loses ord(d) digits.
    PadicInt divide(const PadicInt& d) const;
    PadicInt pow(unsigned long k) const;
    PadicInt with_prec(long prec) const;

    std::vector<unsigned long> digits(std::size_t count) const;
    std::string digit_string(std::size_t count) const;

private:
    Int p_ = 5;
    long prec_ = 0;
    Int value_;
};

// ord_p of a nonzero rational.
long ordp(const Rat& x, const Int& p);

// Coefficients constant term first.
using PadicPoly = std::vector<PadicInt>;

// Roots in Z_p lifted from simple roots mod p.
std::vector<PadicInt> hensel_roots(const std::vector<Int>& g, const Int& p, long prec);

struct QpFactorization {
    PadicPoly linear;  // t - root
    PadicPoly cubic;   // monic
    PadicInt root;
};

QpFactorization factor_over_qp(const std::vector<Int>& g, const Int& p, long prec);

// log_p of a unit of Z_p.
PadicInt padic_log(const PadicInt& x);

// Arithmetic context of L_p.
struct TowerField {
    Int p;
    long prec = 0;              // coordinates are stored modulo p^prec
    Int modulus;                // p^prec
    Int u_b, u_c;               // u^2 + u_b u + u_c = 0
    std::array<Int, 3> w_poly;  // w^3 + w2 w^2 + w1 w + w0 = 0, entries [w0, w1, w2]
    int ramification = 3;
    int residue_degree = 2;
};

class TowerElem {
public:
    static constexpr std::size_t kDim = 6;
    using Coords = std::array<Int, kDim>;

    TowerElem() = default;
    TowerElem(std::shared_ptr<const TowerField> field, Coords c, long prec);

    static TowerElem scalar(std::shared_ptr<const TowerField> field, const Int& a);
    static TowerElem scalar(std::shared_ptr<const TowerField> field, const PadicInt& a);
    static TowerElem basis(std::shared_ptr<const TowerField> field, std::size_t index);

    const Coords& coords() const { return c_; }
    const Int& coord(std::size_t i) const { return c_[i]; }
    long prec() const { return prec_; }
    const std::shared_ptr<const TowerField>& field() const { return field_; }
    PadicInt coord_padic(std::size_t i) const;

    bool is_zero() const;

    TowerElem operator+(const TowerElem& o) const;
    TowerElem operator-(const TowerElem& o) const;
    TowerElem operator-() const;
    TowerElem operator*(const TowerElem& o) const;
    TowerElem operator*(const Int& k) const;
    TowerElem pow(unsigned long k) const;
    TowerElem with_prec(long prec) const;

    // Exact division by an integer p^k * unit; the quotient must be integral.
    TowerElem div_int(const Int& d) const;
    // General division; the quotient must be integral. Loses up to the
    // largest pivot valuation of the multiplication matrix of d.
    TowerElem divide(const TowerElem& d) const;

    // Column j is the coordinate vector of this * basis_j.
    std::vector<std::vector<Int>> mult_matrix() const;

    // ord_p from coordinates (w is a uniformizer): a rational with denominator 3.
    Rat valuation() const;

    std::string debug_string(std::size_t digits = 5) const;

    friend bool operator==(const TowerElem& a, const TowerElem& b);

private:
    std::shared_ptr<const TowerField> field_;
    Coords c_{};
    long prec_ = 0;
};

TowerElem tower_mul(const TowerElem& x, const TowerElem& y);
// (1/6) ord_p of the norm to Q_p, computed from the 6x6 multiplication matrix.
Rat tower_ord(const TowerElem& x);
// p-adic logarithm of a unit of L_p.
TowerElem padic_log(const TowerElem& x);

// Solves A x = b over Z_p with all entries modulo p^prec, full pivoting on
// valuation. Returns the solution and the precision lost.
struct PadicSolve {
    std::vector<Int> x;
    long loss = 0;
    long det_valuation = 0;
};
PadicSolve solve_padic(std::vector<std::vector<Int>> a, std::vector<Int> b, const Int& p, long prec);
long det_valuation(std::vector<std::vector<Int>> a, const Int& p, long prec);

// The four roots of the quartic in L_p, theta^(1) in Z_p first.
class SplittingField {
public:
    SplittingField(const std::vector<Int>& g, const Int& p, long target_prec, const std::vector<Int>& u_poly,
                   long guard = 40);

    const std::shared_ptr<const TowerField>& field() const { return field_; }
    const Int& p() const { return field_->p; }
    long target_prec() const { return target_; }
    const QpFactorization& factorization() const { return fac_; }
    const std::array<TowerElem, 4>& roots() const { return roots_; }
    const TowerElem& root(int i) const { return roots_.at(static_cast<std::size_t>(i - 1)); }
    // True when theta^(2) is the generator w itself.
    bool theta2_is_generator() const { return theta2_is_w_; }
    const std::vector<Int>& g() const { return g_; }

    TowerElem embed_power(const RatVec& power_coeffs, int root_index) const;

    // Worst-case absolute precision among the emitted roots.
    long roots_prec() const;

private:
    std::vector<Int> g_;
    long target_ = 0;
    std::shared_ptr<const TowerField> field_;
    QpFactorization fac_;
    std::array<TowerElem, 4> roots_;
    bool theta2_is_w_ = false;
};

// g evaluated at an element of L_p.
TowerElem eval_poly(const std::vector<Int>& g, const TowerElem& x);

std::vector<TowerElem> roots_in_tower(const SplittingField& sf);

}  // namespace lns
