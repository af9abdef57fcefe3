#pragma once

// Lucas sequences of mu = (u + v sqrt(-d)) / 2 for the case n >= 5 prime.

#include "lns/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lns {

struct LucasParams {
    Int u, v;
    int d = 11;
};

// Throws InputError on d outside {1, 5, 11, 55}, on a parity violation, or
// when mu is not integral.
void validate(const LucasParams& p);

// mu * conj(mu) = (u^2 + d v^2) / 4.
Int lucas_norm(const LucasParams& p);

Int lucas_term(const LucasParams& p, long m);
// L_0 .. L_count-1.
std::vector<Int> lucas_sequence(const LucasParams& p, long count);
// (mu^m - conj(mu)^m) / (mu - conj(mu)) by powering in Z[(1 + sqrt(-d))/2].
Int lucas_term_by_powering(const LucasParams& p, long m);

// mu / conj(mu) is a root of unity.
bool is_degenerate(const LucasParams& p);

// gcd(L_m, L_k) == |L_gcd(m, k)|; DomainError on degenerate params.
bool lucas_gcd_check(const LucasParams& p, long m, long k);

bool primitive_divisor_test(const LucasParams& p, long n, const Int& q);

// Least m >= 1 with q | L_m. InputError when q divides the norm.
std::optional<long> rank_of_apparition(const LucasParams& p, const Int& q);

struct PrimeExclusion {
    long q = 0;
    bool excluded = false;
    std::string argument;
    // Only for q = 11.
    int legendre = 0;
    std::optional<long> rank;
};

struct ExclusionReport {
    LucasParams params;
    long n = 0;
    std::vector<PrimeExclusion> primes;  // q = 2, 5, 11
    bool all_excluded() const;
};

ExclusionReport exclude_small_primes(const LucasParams& p, long n);

// Prime factors of |n| > 0, ascending.
std::vector<Int> prime_factors(const Int& n);

// Primitive prime divisors of L_n.
std::vector<Int> primitive_divisors(const LucasParams& p, long n);

// An entry (a, b) of the table of defective Lucas pairs: alpha = (a + sqrt(b))/2
// has no primitive divisor at index n.
struct DefectivePair {
    long n;
    long a;
    long b;
};
const std::vector<DefectivePair>& defective_pairs_prime_index();

struct BhvCandidate {
    long n = 0;
    Int u;
    Int dv2;  // d v^2
    int d = 0;
    Int v;
};

// Candidates with no primitive divisor and every prime factor of L_n in
// {2, 5, 11}; empty for n >= 30.
std::vector<BhvCandidate> bhv_gate(long n);

struct LucasVerdict {
    int d = 0;
    long n = 0;
    std::vector<BhvCandidate> candidates;
    std::vector<std::string> rejections;
    // (x, z) pairs obtained, always empty unless the argument breaks.
    std::vector<std::pair<Int, Int>> solutions;
    bool no_solution() const { return solutions.empty(); }
};

LucasVerdict lucas_verdict(int d, long n);
inline LucasVerdict n5_verdict(int d) { return lucas_verdict(d, 5); }

}  // namespace lns
