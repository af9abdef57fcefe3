#include "lns/error.hpp"
#include "lns/quartic.hpp"

#include <doctest.h>

using namespace lns;

TEST_CASE("split forms") {
    for (long a2 = 0; a2 <= 7; ++a2)
        for (long b2 = 0; b2 <= 7; ++b2) {
            auto c = split_form(0, 0, a2, b2);
            CHECK(c.D * c.u * c.u == 2 * ipow(5, a2) * ipow(11, b2));
            CHECK((c.D == 2 || c.D == 10 || c.D == 22 || c.D == 110));
        }
    CHECK(split_form(1, 0, 3, 2).D == 10);
    CHECK(split_form(1, 0, 3, 2).u == 55);
    CHECK_THROWS_AS(split_form(-1, 0, 0, 0), InputError);
}

TEST_CASE("impossibility replay") {
    for (long D : {2L, 10L, 22L, 110L}) {
        CAPTURE(D);
        auto r = verify_impossibility(D);
        CHECK(r.no_solutions());
        CHECK(r.a1_zero);
        CHECK(r.b1_zero);
        for (const auto* checks : {&r.a1_checks, &r.b1_checks}) {
            REQUIRE_FALSE(checks->empty());
            for (const auto& c : *checks) {
                CHECK(c.holds());
                CHECK(c.cases > 0);
            }
        }
        // When p does not divide D, D must be a non-residue mod p.
        if (D % 5 != 0) CHECK(r.a1_checks.size() == 1);
        if (D % 11 != 0) CHECK(r.b1_checks.size() == 1);
    }
    CHECK_THROWS_AS(verify_impossibility(6), InputError);
}

TEST_CASE("the residue claims agree with a direct count") {
    for (long D : {2L, 10L, 22L, 110L})
        for (long p : {5L, 11L}) {
            if (D % p == 0) continue;
            bool residue = false;
            for (long t = 1; t < p; ++t) residue = residue || (t * t - D) % p == 0;
            CHECK_FALSE(residue);
        }
}

TEST_CASE("descent input checks") {
    CHECK_THROWS_AS(descend_n4(1, 1, Int(3), Int(2)), InputError);
    CHECK_THROWS_AS(descend_n4(0, 0, Int(0), Int(1)), InputError);
    CHECK_THROWS_AS(descend_n4(-1, 0, Int(1), Int(1)), InputError);
    CHECK_THROWS_AS(descend_n4(0, 0, Int(2), Int(4)), InputError);
    // x^2 + 5^a 11^b = y^4 has no solution with y <= 300.
    for (long y = 1; y <= 300; ++y) {
        Int y4 = ipow(Int(y), 4);
        for (long a = 0; ipow(5, a) < y4; ++a)
            for (long b = 0; ipow(5, a) * ipow(11, b) < y4; ++b) {
                Int r = y4 - ipow(5, a) * ipow(11, b);
                Int x = sqrt(r);
                if (x * x == r && x > 0) CHECK(gcd(x, Int(y)) != 1);
            }
    }
}
