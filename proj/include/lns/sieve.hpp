#pragma once

// Congruence sieve over the exponent box left by the reduction: an exponent
// vector survives a split prime q when the four residues of h modulo the
// primes above q are consistent with h = x - theta y.

#include "lns/config.hpp"
#include "lns/thue_mahler.hpp"

#include <array>
#include <string>
#include <vector>

namespace lns {

struct SplitPrime {
    long q = 0;
    std::array<long, 4> roots{};  // ascending
    // H3 = e3.first H1 + e3.second H2 and H4 = e4.first H1 + e4.second H2 (mod q)
    std::pair<long, long> e3, e4;
};

// Throws DomainError unless g has four distinct roots modulo q.
SplitPrime split_prime(const FieldData& fd, long q);

// (a1, a2, n1, n2)
using ExpQuad = std::array<long, 4>;

struct SieveFilter {
    long q = 0;
    long survivors = 0;
};

struct SurvivorCheck {
    ExpQuad e{};
    bool linear = false;  // h is exactly x - theta y
    Int x, y;
    Int form_value;       // quartic form at (x, y)
    bool accepted = false;
    std::string reason;
};

struct SieveCaseTrace {
    AlphaCase alpha;
    long first_prime = 0;
    std::array<long, 4> orders{};      // of eps1, eps2, pi51, pi111 modulo the first prime
    long residue_box = 0;              // exponent classes examined
    long first_congruence = 0;         // classes satisfying the H3 relation
    long both_congruences = 0;         // ... and the H4 relation
    long lifted = 0;                   // representatives inside the bounds
    std::vector<SieveFilter> filters;  // later primes
    std::vector<ExpQuad> survivors;     // after the last prime
    std::vector<SurvivorCheck> checks;  // exact verification of the survivors
    bool accepted_any() const;
};

// Exact acceptance test for a survivor: h = x - theta y with
// F(x, y) = +2 * 13^6 * 5^c * 11^d, c = n1 + j1 and d = n2 + j2 under the
// divisibility rule, 2*13^2 | x and gcd(x, y) = 1.
SurvivorCheck check_survivor(const FieldData& fd, const AlphaCase& alpha, const ExpQuad& e);

struct SieveBox {
    long n1 = 0, n2 = 0, A = 0;
};

SieveCaseTrace sieve_case(const FieldData& fd, const AlphaCase& alpha, const SieveBox& box,
                          const std::vector<long>& chain);

// Exact check: is h(alpha, e) of the form x - theta y? Returns (x, y) when so.
bool is_linear_form_value(const FieldData& fd, const AlphaCase& alpha, const ExpQuad& e, Int* x = nullptr,
                          Int* y = nullptr);

// All exponent vectors in the box with h = x - theta y, by exact arithmetic.
std::vector<ExpQuad> brute_force_solutions(const FieldData& fd, const AlphaCase& alpha, const SieveBox& box);

}  // namespace lns
