#pragma once

// Sparse multivariate polynomials with integer coefficients. Only meant for
// the handful of tiny symbolic expansions in the descent.

#include "lns/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace lns {

class Poly {
public:
    using Monomial = std::vector<int>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}
    static Poly constant(int nvars, const Int& c);
    static Poly var(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Int& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Int& k) const;
    Poly pow(unsigned k) const;

    // Replaces every variable i by subs[i]; all substitutes share one ring.
    Poly substitute(const std::vector<Poly>& subs) const;
    Int evaluate(const std::vector<Int>& at) const;

    std::string to_string(const std::vector<std::string>& names) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

private:
    int nvars_;
    std::map<Monomial, Int> terms_;
};

}  // namespace lns
