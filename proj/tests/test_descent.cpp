#include "common.hpp"

#include "lns/descent.hpp"
#include "lns/error.hpp"

#include <doctest.h>

#include <random>

using namespace lns;

TEST_CASE("residue classes and curves") {
    CHECK(residue_class_map(13, 4) == ResidueClass{1, 4, 2, 0});
    CHECK(residue_class_map(0, 0) == ResidueClass{0, 0, 0, 0});
    CHECK(residue_class_map(6, 11) == ResidueClass{0, 5, 1, 1});
    CHECK_THROWS_AS(residue_class_map(-1, 0), InputError);
    CHECK(curve_data(5, 4).coefficient == Int(3125) * 14641);
    CHECK_THROWS_AS(curve_data(6, 0), InputError);

    CHECK(verify_point_on_curve(Rat(3), Rat(4), curve_data(0, 1)).on_curve);
    CHECK(verify_point_on_curve(Rat(3), Rat(-4), curve_data(0, 1)).on_curve);
    CHECK_FALSE(verify_point_on_curve(Rat(2), Rat(3), curve_data(0, 1)).on_curve);
}

TEST_CASE("known solutions land on their curves") {
    for (const auto& [a, b, x, y] : test::config().golden.n3) {
        CAPTURE(a);
        CAPTURE(b);
        auto [X, Y] = solution_to_point(a, b, Int(x), Int(y));
        auto rc = residue_class_map(a, b);
        auto pc = verify_point_on_curve(X, Y, curve_data(rc.i, rc.j));
        CHECK(pc.on_curve);
        CHECK(pc.s_unit_denominators);
    }
    auto [X, Y] = solution_to_point(13, 7, Int(0), Int(0));
    CHECK(X == 0);
}

TEST_CASE("the rational point on E54") {
    const auto& g = test::config().golden;
    auto pc = verify_point_on_curve(g.e54_x, g.e54_y, curve_data(5, 4));
    CHECK(pc.on_curve);
    CHECK(pc.x_numerator_prime_to_55);
    // The denominators involve primes other than 5 and 11, so the point does
    // not come from a solution.
    CHECK_FALSE(pc.s_unit_denominators);
    CHECK(pc.x_denominator == Int("101288668233063249"));
    CHECK(pc.y_denominator == Int("32236010714473507582283943"));
    CHECK(pc.y_denominator * pc.y_denominator == pc.x_denominator * pc.x_denominator * pc.x_denominator);

    Rat bumped = g.e54_x + 1;
    CHECK_FALSE(verify_point_on_curve(bumped, g.e54_y, curve_data(5, 4)).on_curve);
}

TEST_CASE("bounded Thue search matches brute force") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        CubicForm f{Int(coef(rng)), Int(coef(rng)), Int(coef(rng)), Int(coef(rng))};
        if (f[0] == 0) f[0] = 1;
        std::vector<Int> rhs{Int(-3), Int(1), Int(2), Int(7)};
        const long B = 25;
        std::vector<ThueHit> brute;
        for (const Int& r : rhs)
            for (long X = -B; X <= B; ++X)
                for (long Y = -B; Y <= B; ++Y)
                    if (eval_cubic(f, Int(X), Int(Y)) == r) brute.push_back({Int(X), Int(Y), r});
        std::sort(brute.begin(), brute.end(), [](const ThueHit& p, const ThueHit& q) {
            if (p.rhs != q.rhs) return p.rhs < q.rhs;
            if (p.X != q.X) return p.X < q.X;
            return p.Y < q.Y;
        });
        CAPTURE(trial);
        CHECK(thue_bounded_search(f, rhs, B) == brute);
    }

    auto sums = thue_bounded_search({Int(1), Int(0), Int(0), Int(1)}, {Int(2)}, 50);
    REQUIRE(sums.size() == 1);
    CHECK(sums[0] == ThueHit{Int(1), Int(1), Int(2)});
    CHECK_THROWS_AS(thue_bounded_search({Int(0), Int(1), Int(0), Int(1)}, {Int(1)}, 5), InputError);
    CHECK_THROWS_AS(thue_bounded_search({Int(1), Int(0), Int(0), Int(1)}, {Int(1)}, 0), InputError);
}

TEST_CASE("element equation relations") {
    const auto& C = test::config().cubic;
    for (int i : {0, 1}) {
        CAPTURE(i);
        auto rel = element_equation_relations(C, i);
        auto printed = printed_relations(i);
        for (int k = 0; k < 3; ++k) CHECK(rel[k] == printed[k]);
    }
    CHECK_THROWS_AS(printed_relations(2), InputError);

    // Direct multiplication in the power basis.
    RatVec eps = elem_to_power_basis(C.units.at("eps"), C);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int i = 0; i < 3; ++i) {
        auto rel = element_equation_relations(C, i);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Int> uvw{Int(dist(rng)), Int(dist(rng)), Int(dist(rng))};
            RatVec z{Rat(uvw[0]), Rat(uvw[1]), Rat(uvw[2])};
            RatVec prod = power_mul(z, z, C);
            for (int k = 0; k < i; ++k) prod = power_mul(prod, eps, C);
            for (int k = 0; k < 3; ++k) CHECK(Rat(rel[k].evaluate(uvw)) == prod[k]);
        }
    }
}

TEST_CASE("the i = 0 reduction") {
    const auto& C = test::config().cubic;
    for (auto [c, d] : {std::pair{1L, 1L}, {3L, 1L}, {3L, 3L}, {5L, 7L}}) {
        CAPTURE(c);
        CAPTURE(d);
        auto r = case_i0_reduce(C, c, d);
        CHECK(r.parametrization_kills_coeff2);
        CHECK(r.coeff1_factorization);
        CHECK(r.five_divides_v2);
        CHECK(r.eleven_branch_forces_d1);
        CHECK(r.instances.size() == (d == 1 ? 2u : 1u));
        for (const auto& inst : r.instances) {
            CHECK(inst.form == CubicForm{Int(1), Int(0), Int(0), Int(275)});
            for (const auto& h : thue_bounded_search(inst.form, inst.rhs, 2000)) {
                CHECK(h.Y == 0);
                CHECK(abs(h.X) == 1);
            }
        }
    }
    CHECK_THROWS_AS(case_i0_reduce(C, 2, 1), InputError);
    CHECK_THROWS_AS(case_i0_reduce(C, 1, 0), InputError);
}

TEST_CASE("the i = 1 system") {
    const auto& C = test::config().cubic;
    CHECK(i1_system_determinant() == 1);
    auto t = case_i1_system_solve(C, Int(1), Int(0), 1);
    CHECK(t.u == -46475);
    CHECK(t.w == -1099);
    CHECK(t.satisfies_coeff2);

    auto rel = element_equation_relations(C, 1);
    for (long X = -6; X <= 6; ++X)
        for (long Y = -6; Y <= 6; ++Y)
            for (int s : {1, -1})
                for (int sign : {1, -1}) {
                    auto r = case_i1_system_solve(C, Int(X), Int(Y), s, sign);
                    CHECK(r.satisfies_coeff2);
                    CHECK(rel[2].evaluate({r.u, r.v, r.w}) == 0);
                }
    CHECK_THROWS_AS(case_i1_system_solve(C, Int(1), Int(1), 2), InputError);
}

TEST_CASE("quartic form and the Thue-Mahler transform") {
    const auto& C = test::config().cubic;
    QuarticForm expect{Int(150975), Int(185900), Int(85800), Int(17592), Int(1352)};
    CHECK(printed_quartic_form() == expect);
    auto der = derive_quartic_form(C);
    CHECK(der.form == expect);
    CHECK(der.branches.size() == 4);

    CHECK(eval_quartic(expect, Int(1), Int(0)) == 150975);
    CHECK(eval_quartic(expect, Int(0), Int(1)) == 1352);

    for (long X = -20; X <= 20; ++X)
        for (long Y = -20; Y <= 20; ++Y) {
            auto t = transform_tm(Int(X), Int(Y));
            CHECK(t.identity_holds);
            CHECK(t.x == 338 * Y);
            CHECK(t.y == X);
            CHECK(t.tm2 == 2 * ipow(13, 6) * t.tm1);
        }
    auto t10 = transform_tm(Int(1), Int(0));
    CHECK(t10.tm2 == Int("1457454977550"));
    auto t01 = transform_tm(Int(0), Int(1));
    CHECK(t01.tm2 == ipow(338, 4));
}
