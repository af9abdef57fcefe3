#include "common.hpp"

#include "lns/thue_mahler.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lns;

namespace {

const ReductionSummary& summary() {
    static const ReductionSummary s = [] {
        ThueMahlerReducer r(test::config());
        return r.run_all();
    }();
    return s;
}

}  // namespace

TEST_CASE("alpha classes") {
    auto cases = alpha_cases(test::config().tm);
    CHECK(cases.size() == 18);
    for (std::size_t i = 0; i < cases.size(); ++i)
        for (std::size_t j = i + 1; j < cases.size(); ++j) CHECK_FALSE(cases[i] == cases[j]);
    CHECK(std::find(cases.begin(), cases.end(), AlphaCase{6, 0, 2, 1}) != cases.end());
    for (const auto& c : cases) {
        CHECK(c.j1 <= 2);
        CHECK(c.j2 <= 1);
        CHECK(alpha_exponents(c).size() == tm_generators().size());
    }
    CHECK(AlphaCase{6, 0, 2, 1}.label() == "(6,0,2,1)");
}

TEST_CASE("lattice weights") {
    CHECK(lattice_weight(Int(1000), Int(7)) == 200);
    CHECK(lattice_weight(Int(546), Int(32)) == 20);
    CHECK(lattice_weight(Int(10), Int(10)) == 1);
}

TEST_CASE("reduction chain") {
    const auto& s = summary();
    REQUIRE(s.passed);
    REQUIRE(s.rounds.size() == 3);

    const auto& r1 = s.rounds[0];
    CHECK(r1.p5.rigorous_bound == 305);
    CHECK(r1.p5.stated_bound == 307);
    CHECK(r1.p11.rigorous_bound == 206);
    CHECK(r1.p5.weight == Int("200000000000000000"));
    CHECK(r1.out.n1 == 307);
    CHECK(r1.out.A == 497);

    const auto& r2 = s.rounds[1];
    CHECK(r2.out.n1 == 32);
    CHECK(r2.out.n2 == 32);
    CHECK(r2.out.A == 52);

    CHECK(s.final.n1 == 25);
    CHECK(s.final.n2 == 18);
    CHECK(s.final.A == 33);

    for (const auto& rd : s.rounds) {
        CHECK(rd.out.n1 <= rd.in.n1);
        CHECK(rd.out.n2 <= rd.in.n2);
        CHECK(rd.out.A <= rd.in.A);
        CHECK(rd.real.cases.size() == 36);
        for (const auto& c : rd.real.cases) {
            if (!(c.alpha == AlphaCase{6, 0, 2, 1})) continue;
            CHECK(c.c15 == doctest::Approx(c.i0 == 1 ? 38.61 : 16.23).epsilon(1e-3));
        }
    }
}

TEST_CASE("a further round cannot enlarge the box") {
    const auto& s = summary();
    ThueMahlerReducer r(test::config());
    ReductionRound sched;
    auto again = r.run_round(4, s.final, sched);
    CHECK(again.p5.passed);
    CHECK(again.p11.passed);
    CHECK(again.out.n1 <= s.final.n1);
    CHECK(again.out.n2 <= s.final.n2);
    CHECK(again.out.A <= s.final.A);
}

TEST_CASE("p-adic form coefficients") {
    ThueMahlerReducer r(test::config());
    for (long p : {5L, 11L}) {
        auto coeffs = r.padic_form_coefficients(p, AlphaCase{0, 0, 0, 0});
        bool some_unit = false;
        for (const auto& row : coeffs)
            for (int k = 1; k < 5; ++k) some_unit = some_unit || row[k].valuation() == 0;
        CAPTURE(p);
        CHECK(some_unit);
    }
}
