#include "common.hpp"

#include "lns/error.hpp"
#include "lns/padic.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lns;

namespace {

// Naive oracle: every root of g mod p^k found by direct search.
std::vector<long> roots_mod(const std::vector<Int>& g, long pk) {
    std::vector<long> out;
    for (long x = 0; x < pk; ++x) {
        if (eval_poly_mod(g, Int(x), Int(pk)) == 0) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("Hensel lifting of the rational root") {
    const auto& cfg = test::config();
    const auto& g = cfg.quartic.defining_poly;
    for (long p : {5L, 11L}) {
        CAPTURE(p);
        const auto& setup = cfg.padic_setup(p);
        auto roots = hensel_roots(g, Int(p), 40);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].digits(5) == setup.printed_g1_root);
        CHECK(eval_poly_mod(g, roots[0].value(), ipow(Int(p), 40)) == 0);

        // Brute force agrees with the first three digits.
        long p3 = p * p * p;
        auto brute = roots_mod(g, p3);
        Int r3 = roots[0].value() % p3;
        CHECK(std::find(brute.begin(), brute.end(), r3.get_si()) != brute.end());
    }
    CHECK(hensel_roots(g, Int(5), 40)[0].digit_string(5) == "0.20404");
}

TEST_CASE("factorization over Q_p") {
    const auto& cfg = test::config();
    const auto& g = cfg.quartic.defining_poly;
    for (long p : {5L, 11L}) {
        CAPTURE(p);
        const auto& setup = cfg.padic_setup(p);
        auto f = factor_over_qp(g, Int(p), 60);
        REQUIRE(f.cubic.size() == 4);
        CHECK(f.cubic[3].value() == 1);
        for (std::size_t k = 0; k < 3; ++k) {
            CAPTURE(k);
            CHECK(f.cubic[k].digits(5) == setup.printed_g2[k]);
        }
        // (t - root) * cubic reproduces g to working precision.
        long prec = 50;
        Int mod = ipow(Int(p), prec);
        for (int i = 0; i <= 4; ++i) {
            Int c = 0;
            for (int j = 0; j <= 3; ++j) {
                int k = i - j;
                if (k < 0 || k > 1) continue;
                c += f.cubic[j].value() * f.linear[k].value();
            }
            Int diff = c - g[i];
            CHECK(((diff % mod) + mod) % mod == 0);
        }
    }
}

TEST_CASE("valuations and logarithms") {
    Int p(5);
    CHECK(ordp(Rat(250), p) == 3);
    Rat q(7, 125);
    CHECK(ordp(q, p) == -3);
    CHECK(PadicInt(p, 20, Int(0)).valuation() == 20);
    CHECK(PadicInt(p, 20, Int(75)).valuation() == 2);

    PadicInt a(p, 30, Int(6)), b(p, 30, Int(11));
    // log(ab) = log a + log b for principal units.
    CHECK((padic_log(a * b) - (padic_log(a) + padic_log(b))).is_zero());
    CHECK(padic_log(a).valuation() >= 1);
    CHECK(padic_log(PadicInt(p, 30, Int(1))).is_zero());

    PadicInt third = PadicInt(p, 30, Int(1)).divide(PadicInt(p, 30, Int(3)));
    CHECK((third * PadicInt(p, 30, Int(3))).value() == 1);
}

TEST_CASE("splitting field roots") {
    const auto& cfg = test::config();
    for (long p : {5L, 11L}) {
        CAPTURE(p);
        const auto& setup = cfg.padic_setup(p);
        SplittingField sf(cfg.quartic.defining_poly, Int(p), 60, setup.u_poly);
        for (int i = 1; i <= 4; ++i) {
            CAPTURE(i);
            auto v = eval_poly(cfg.quartic.defining_poly, sf.root(i));
            CHECK(v.valuation() >= Rat(40));
        }
        CHECK(sf.root(1).valuation() == Rat(0));
        // Product of roots = g(0).
        auto prod = sf.root(1) * sf.root(2) * sf.root(3) * sf.root(4);
        auto diff = prod - TowerElem::scalar(sf.field(), cfg.quartic.defining_poly[0]);
        CHECK(diff.valuation() >= Rat(40));
    }
}
