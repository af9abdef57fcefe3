#include "lns/error.hpp"
#include "lns/lucas.hpp"

#include <doctest.h>

#include <random>

using namespace lns;

namespace {

// L_0 = 0, L_1 = 1, L_{m+1} = u L_m - N L_{m-1}.
std::vector<Int> recurrence(const LucasParams& p, long count) {
    Int N = (p.u * p.u + p.d * p.v * p.v) / 4;
    std::vector<Int> L{Int(0), Int(1)};
    while (static_cast<long>(L.size()) < count) L.push_back(p.u * L.back() - N * L[L.size() - 2]);
    L.resize(count);
    return L;
}

LucasParams random_params(std::mt19937_64& rng) {
    static const int ds[] = {1, 5, 11, 55};
    std::uniform_int_distribution<long> dist(-200, 200);
    std::uniform_int_distribution<int> pick(0, 3);
    for (;;) {
        LucasParams p{Int(dist(rng)), Int(dist(rng)), ds[pick(rng)]};
        if (p.d == 1 || p.d == 5) {
            p.u *= 2;
            p.v *= 2;
        } else if ((p.u - p.v) % 2 != 0) {
            p.v += 1;
        }
        if (p.v == 0 || p.u == 0) continue;
        validate(p);
        if (!is_degenerate(p)) return p;
    }
}

}  // namespace

TEST_CASE("small sequence") {
    LucasParams p{Int(1), Int(1), 11};
    CHECK(lucas_norm(p) == 3);
    auto L = lucas_sequence(p, 8);
    std::vector<Int> expect{Int(0), Int(1), Int(1), Int(-2), Int(-5), Int(1), Int(16), Int(13)};
    CHECK(L == expect);
    CHECK(lucas_term(p, 5) == 1);
    CHECK(lucas_term_by_powering(p, 5) == 1);
}

TEST_CASE("closed form against the recurrence") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        auto p = random_params(rng);
        auto rec = recurrence(p, 31);
        auto seq = lucas_sequence(p, 31);
        CAPTURE(p.u);
        CAPTURE(p.v);
        CAPTURE(p.d);
        CHECK(seq == rec);
        for (long m = 0; m <= 30; ++m) CHECK(lucas_term_by_powering(p, m) == rec[m]);
    }
}

TEST_CASE("strong divisibility and rank of apparition") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_params(rng);
        if (gcd(p.u, lucas_norm(p)) != 1) continue;
        auto L = recurrence(p, 61);
        for (long m = 1; m <= 20; ++m)
            for (long k = 1; k <= 20; ++k) CHECK(lucas_gcd_check(p, m, k));

        Int N = lucas_norm(p);
        for (long q : {3L, 7L, 13L, 17L, 19L, 23L}) {
            if (N % q == 0) {
                CHECK_THROWS_AS(rank_of_apparition(p, Int(q)), InputError);
                continue;
            }
            auto r = rank_of_apparition(p, Int(q));
            REQUIRE(r.has_value());
            for (long m = 1; m <= 60; ++m) CHECK((L[m] % q == 0) == (m % *r == 0));
            // The rank divides q - (-d/q) or equals q when q divides the discriminant.
            CHECK(*r <= q + 1);
        }
    }
}

TEST_CASE("rank examples") {
    LucasParams p{Int(1), Int(1), 11};
    CHECK_THROWS_AS(rank_of_apparition(p, Int(3)), InputError);
    CHECK(rank_of_apparition(p, Int(7)) == 8);
    CHECK(rank_of_apparition(p, Int(2)) == 3);
}

TEST_CASE("parity for d = 55") {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> dist(-99, 99);
    for (int trial = 0; trial < 30; ++trial) {
        LucasParams p{Int(2 * dist(rng) + 1), Int(2 * dist(rng) + 1), 55};
        auto L = lucas_sequence(p, 201);
        for (long m = 1; m <= 200; ++m) {
            // u odd, N even: L_m = L_{m-1} mod 2.
            CHECK(L[m] % 2 != 0);
        }
    }
}

TEST_CASE("degenerate and invalid parameters") {
    CHECK_THROWS_AS(validate({Int(1), Int(2), 11}), InputError);
    CHECK_THROWS_AS(validate({Int(1), Int(1), 5}), InputError);
    CHECK_THROWS_AS(validate({Int(1), Int(1), 7}), InputError);
    LucasParams deg{Int(2), Int(2), 1};
    CHECK(is_degenerate(deg));
    CHECK_THROWS_AS(lucas_gcd_check(deg, 4, 6), DomainError);
    CHECK(is_degenerate({Int(4), Int(0), 1}));
}

TEST_CASE("exclusion of 2, 5 and 11") {
    auto r = exclude_small_primes({Int(1), Int(1), 11}, 5);
    REQUIRE(r.primes.size() == 3);
    CHECK(r.all_excluded());
    CHECK(r.primes[0].q == 2);
    CHECK(r.primes[2].q == 11);
}

TEST_CASE("factoring and primitive divisors") {
    CHECK(prime_factors(Int("600851475143")) == std::vector<Int>{Int(71), Int(839), Int(1471), Int(6857)});
    CHECK(prime_factors(Int(1)).empty());
    CHECK(prime_factors(Int(-12)) == std::vector<Int>{Int(2), Int(3)});

    LucasParams p{Int(1), Int(1), 11};
    CHECK(primitive_divisors(p, 7) == std::vector<Int>{Int(13)});
    CHECK(primitive_divisors(p, 5).empty());
    CHECK(primitive_divisor_test(p, 7, Int(13)));
    CHECK_FALSE(primitive_divisor_test(p, 6, Int(2)));
}

TEST_CASE("defective pairs and the gate") {
    for (const auto& e : defective_pairs_prime_index()) {
        CAPTURE(e.n);
        CAPTURE(e.a);
        CAPTURE(e.b);
        // alpha = (a + sqrt(b)) / 2 is an algebraic integer.
        CHECK((e.a * e.a - e.b) % 4 == 0);
    }
    auto g5 = bhv_gate(5);
    REQUIRE(g5.size() == 1);
    CHECK(g5[0].u == 1);
    CHECK(g5[0].dv2 == 11);
    CHECK(g5[0].d == 11);
    CHECK(bhv_gate(7).empty());
    CHECK(bhv_gate(31).empty());
    CHECK_THROWS(bhv_gate(9));
}

TEST_CASE("verdicts") {
    for (int d : {1, 5, 11, 55}) {
        CAPTURE(d);
        auto v = n5_verdict(d);
        CHECK(v.no_solution());
        CHECK_FALSE(v.rejections.empty());
        CHECK(lucas_verdict(d, 7).no_solution());
    }
    CHECK(n5_verdict(11).candidates.size() == 1);
    CHECK_THROWS(lucas_verdict(11, 4));
    CHECK_THROWS(lucas_verdict(3, 5));
}
