#pragma once

// Exhaustive search for x^2 + 5^a 11^b = y^n with gcd(x, y) = 1.

#include "lns/arith.hpp"

#include <compare>
#include <string>
#include <vector>

namespace lns {

struct Solution {
    int n = 3;
    unsigned a = 0;
    unsigned b = 0;
    Int x;
    Int y;

    friend bool operator==(const Solution&, const Solution&) = default;
};

// Lexicographic on (n, a, b, x); the golden files rely on this order.
bool solution_less(const Solution& lhs, const Solution& rhs);

struct SearchRange {
    long y_max = 2;
    std::vector<int> n_set{3};
    // Upper limit on the number of (y, n, a, b) probes before giving up.
    double work_budget = 2e9;
    unsigned jobs = 1;
};

void validate(const SearchRange& range);

// Number of (a, b) probes the search will perform; used for the budget check.
double estimated_work(const SearchRange& range);

std::vector<Solution> enumerate_solutions(const SearchRange& range);

bool verify_solution(const Solution& s);

enum class ParityClass { AtLeastOneEven, AbOddXEven, XabOdd };

std::string to_string(ParityClass c);
ParityClass classify_parity(const Solution& s);

}  // namespace lns
