#pragma once

// x^2 + 5^a 11^b = y^4: the factor split y^2 +- x and the replayed
// congruence argument showing there are no solutions.

#include "lns/arith.hpp"

#include <string>
#include <vector>

namespace lns {

struct N4Case {
    long a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    // Z^2 - D u^2 = 2 5^a1 11^b1 with Z = 2y, u = 5^(a2 div 2) 11^(b2 div 2).
    Int Z, u;
    long D = 2;
    bool gcd_Zu_one = false;
};

// D and u for a given split; D u^2 = 2 5^a2 11^b2.
N4Case split_form(long a1, long b1, long a2, long b2);

// InputError unless x^2 + 5^a 11^b = y^4 with x, y >= 1 and gcd(x, y) = 1.
// DomainError if the split violates the coprimality remark.
N4Case descend_n4(long a, long b, const Int& x, const Int& y);

struct ResidueCheck {
    std::string claim;
    long modulus = 0;
    long cases = 0;         // residue tuples examined
    long counterexamples = 0;
    bool holds() const { return counterexamples == 0; }
};

struct N4Replay {
    long D = 0;
    std::vector<ResidueCheck> a1_checks;  // prime 5
    std::vector<ResidueCheck> b1_checks;  // prime 11
    bool a1_zero = false;
    bool b1_zero = false;
    // y^2 + x = 1 with x, y >= 1
    bool terminal_impossible = false;
    bool no_solutions() const { return a1_zero && b1_zero && terminal_impossible; }
};

N4Replay verify_impossibility(long D);

}  // namespace lns
