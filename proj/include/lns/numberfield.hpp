#pragma once

// Exact arithmetic in a number field given by a monic integer polynomial and a
// declared integral basis. Elements are integer coordinate vectors relative to
// that basis (the "[a,b,c,d]" notation).

#include "lns/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace lns {

using RatVec = std::vector<Rat>;

struct FieldElem {
    std::vector<Int> coords;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// p = sign * prod_i elem_i^{exp_i}, exponents may be negative.
struct FactorizationIdentity {
    std::string label;
    Int rational_prime;
    int sign = 1;
    std::vector<std::pair<std::string, int>> factors;
};

class FieldData {
public:
    std::string name;
    std::vector<Int> defining_poly;      // monic, constant term first
    std::vector<RatVec> integral_basis;  // power-basis coordinates of each basis element
    std::map<std::string, FieldElem> units;
    std::map<std::string, FieldElem> primes;
    std::vector<FactorizationIdentity> factorizations;
    int class_number = 1;

    int degree() const { return static_cast<int>(defining_poly.size()) - 1; }

    // Derives the inverse basis matrix; must run before any arithmetic.
    void finalize();

    const std::vector<RatVec>& basis_inverse() const { return basis_inv_; }

    // Any named unit or prime.
    const FieldElem& element(const std::string& label) const;

    // Lowest common denominator of the integral basis.
    Int basis_denominator() const;

private:
    std::vector<RatVec> basis_inv_;
};

FieldElem field_one(const FieldData& fd);
FieldElem field_int(const FieldData& fd, const Int& n);
// theta itself, expressed in the integral basis.
FieldElem field_theta(const FieldData& fd);

RatVec elem_to_power_basis(const FieldElem& e, const FieldData& fd);
// Throws DataIntegrityError if the element is not integral for the basis.
FieldElem power_basis_to_elem(const RatVec& v, const FieldData& fd);

RatVec power_mul(const RatVec& a, const RatVec& b, const FieldData& fd);
FieldElem elem_mul(const FieldElem& a, const FieldElem& b, const FieldData& fd);
FieldElem elem_pow(const FieldElem& a, unsigned long k, const FieldData& fd);
// Power-basis inverse; integral whenever the element is a unit.
RatVec power_inverse(const RatVec& a, const FieldData& fd);
FieldElem elem_inverse_unit(const FieldElem& a, const FieldData& fd);
FieldElem elem_pow_signed(const FieldElem& a, long k, const FieldData& fd);

// Matrix of multiplication by a (power basis), column k = a * theta^k.
std::vector<RatVec> regular_representation(const RatVec& a, const FieldData& fd);
Rat determinant(std::vector<RatVec> m);
Rat elem_norm(const FieldElem& e, const FieldData& fd);
Rat power_norm(const RatVec& a, const FieldData& fd);

bool verify_unit(const FieldElem& e, const FieldData& fd);

struct IdentityCheck {
    std::string label;
    bool holds = false;
};

struct PrimeNormCheck {
    std::string label;
    Rat norm;
    Int prime;
    long residue_degree = 0;
    bool prime_power = false;
};

struct FactorizationReport {
    std::vector<IdentityCheck> identities;
    std::vector<PrimeNormCheck> prime_norms;
    bool all_hold() const;
};

// Checks every factorization identity and the prime-power norm of every prime
// element. Throws DataIntegrityError naming the first failure.
FactorizationReport verify_prime_factorization(const FieldData& fd);

// Exact irreducibility over Q for monic integer polynomials of degree <= 4:
// no rational root and, for degree 4, no product of two monic quadratics.
bool is_irreducible(const std::vector<Int>& monic_poly);

// Full load-time verification of a field: irreducibility, units, factorizations.
void verify_field(const FieldData& fd);

Int eval_poly_mod(const std::vector<Int>& poly, const Int& x, const Int& m);

// Image of e under theta -> root in Z/q.
Int reduce_mod_split_prime(const FieldElem& e, const FieldData& fd, const Int& q, const Int& root);

long mult_order_mod(const Int& r, const Int& q);

}  // namespace lns
