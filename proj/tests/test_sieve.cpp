#include "common.hpp"

#include "lns/error.hpp"
#include "lns/numberfield.hpp"
#include "lns/sieve.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lns;

namespace {

std::vector<long> chain() {
    std::vector<long> out;
    for (const auto& q : test::config().sieve.chain) out.push_back(q.get_si());
    return out;
}

SieveBox published_box() {
    const auto& pb = test::config().tm.published;
    return {pb.n1_final, pb.n2_final, pb.A_final};
}

}  // namespace

TEST_CASE("split primes") {
    const auto& K = test::config().quartic;
    auto s31 = split_prime(K, 31);
    CHECK(s31.roots == std::array<long, 4>{1, 17, 19, 29});
    CHECK(s31.e3 == std::pair<long, long>{27, 5});
    CHECK(s31.e4 == std::pair<long, long>{7, 25});

    auto s79 = split_prime(K, 79);
    CHECK(s79.roots == std::array<long, 4>{6, 14, 41, 44});
    CHECK(s79.e3 == std::pair<long, long>{46, 34});
    CHECK(s79.e4 == std::pair<long, long>{16, 64});
    // The printed pairs for 79 are (1 - beta, beta) with beta computed from
    // the roots mod 79 but reduced mod 73.
    const long m = 73;
    auto beta = [&](long rk) {
        Int num = Int(rk - s79.roots[0]), den = Int(s79.roots[1] - s79.roots[0]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Int(m).get_mpz_t());
        Int b = (num * inv) % m;
        return b > m / 2 ? b - m : b;
    };
    const auto& printed = test::config().sieve.printed.at(79);
    CHECK(printed.display_modulus == m);
    REQUIRE(printed.elimination.size() == 2);
    for (int k = 0; k < 2; ++k) {
        Int b = beta(s79.roots[2 + k]);
        CHECK(printed.elimination[k].second == b);
        CHECK(printed.elimination[k].first == 1 - b);
    }

    auto s223 = split_prime(K, 223);
    CHECK(s223.e3 == std::pair<long, long>{20, 204});
    CHECK(s223.e4 == std::pair<long, long>{39, 185});

    CHECK_THROWS_AS(split_prime(K, 73), DomainError);

    // Oracle: the roots are exactly the zeros of g modulo q.
    for (long q : {31L, 79L, 223L}) {
        std::vector<long> zeros;
        for (long x = 0; x < q; ++x)
            if (eval_poly_mod(K.defining_poly, Int(x), Int(q)) == 0) zeros.push_back(x);
        auto s = split_prime(K, q);
        CHECK(zeros == std::vector<long>(s.roots.begin(), s.roots.end()));
    }
}

TEST_CASE("trace of the class (6,0,2,1)") {
    const auto& K = test::config().quartic;
    auto t = sieve_case(K, {6, 0, 2, 1}, {25, 18, 33}, chain());
    CHECK(t.first_prime == 31);
    CHECK(t.orders == std::array<long, 4>{30, 15, 15, 30});
    CHECK(t.residue_box == 128250);
    CHECK(t.first_congruence == 4140);
    CHECK(t.both_congruences == 171);
    CHECK(t.lifted == 3022);
    REQUIRE(t.filters.size() == 2);
    CHECK(t.filters[0].survivors == 1);
    CHECK(t.filters[1].survivors == 0);
    CHECK(t.survivors.empty());

    auto w = sieve_case(K, {6, 0, 2, 1}, published_box(), chain());
    CHECK(w.first_congruence == 4140);
    CHECK(w.both_congruences == 171);
    CHECK(w.lifted == 9592);
    CHECK(w.filters[0].survivors == 2);
    CHECK(w.filters[1].survivors == 0);
}

TEST_CASE("every class ends empty apart from the rejected survivor") {
    const auto& K = test::config().quartic;
    for (const auto& a : alpha_cases(test::config().tm)) {
        CAPTURE(a.label());
        auto t = sieve_case(K, a, published_box(), chain());
        CHECK_FALSE(t.accepted_any());
        for (const auto& c : t.checks) CHECK_FALSE(c.accepted);
    }
}

TEST_CASE("the survivor with h = x - theta y") {
    const auto& K = test::config().quartic;
    auto c = check_survivor(K, {0, 2, 2, 0}, {-1, 0, 0, 0});
    CHECK(c.linear);
    CHECK(c.x == 3380);
    CHECK(c.y == -3);
    CHECK(c.form_value < 0);
    CHECK_FALSE(c.accepted);

    Int x, y;
    CHECK(is_linear_form_value(K, {0, 2, 2, 0}, {-1, 0, 0, 0}, &x, &y));
    CHECK(x == 3380);
    CHECK_FALSE(is_linear_form_value(K, {0, 2, 2, 0}, {0, 0, 0, 0}));
}

TEST_CASE("the sieve never drops an exact solution") {
    const auto& K = test::config().quartic;
    SieveBox small{3, 3, 3};
    for (const auto& a : alpha_cases(test::config().tm)) {
        CAPTURE(a.label());
        auto exact = brute_force_solutions(K, a, small);
        auto t = sieve_case(K, a, small, chain());
        for (const auto& e : exact) {
            CHECK(std::find(t.survivors.begin(), t.survivors.end(), e) != t.survivors.end());
        }
        if (a == AlphaCase{0, 2, 2, 0}) CHECK(exact.size() == 1);
    }
}
