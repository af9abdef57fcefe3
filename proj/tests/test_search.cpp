#include "lns/error.hpp"
#include "lns/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace lns;

namespace {

// Independent oracle: for each y, walk x downward from y^(n/2) instead of
// enumerating (a, b).
std::vector<Solution> oracle(long y_max, int n) {
    std::vector<Solution> out;
    for (long y = 2; y <= y_max; ++y) {
        Int yn = ipow(Int(y), static_cast<unsigned long>(n));
        for (Int x = isqrt(yn - 1); x >= 1; --x) {
            Int c = yn - x * x;
            Int r = c;
            unsigned a = 0, b = 0;
            while (r % 5 == 0) r /= 5, ++a;
            while (r % 11 == 0) r /= 11, ++b;
            if (r == 1 && gcd(x, Int(y)) == 1) out.push_back({n, a, b, x, Int(y)});
        }
    }
    std::sort(out.begin(), out.end(), solution_less);
    return out;
}

}  // namespace

TEST_CASE("cubic solutions up to 1300 are the eight coprime listed tuples") {
    SearchRange r;
    r.y_max = 1300;
    auto sols = enumerate_solutions(r);
    std::vector<std::array<long, 4>> got;
    for (const auto& s : sols) got.push_back({long(s.a), long(s.b), s.x.get_si(), s.y.get_si()});
    std::vector<std::array<long, 4>> want{{0, 1, 4, 3},     {0, 1, 58, 15}, {0, 2, 2, 5},   {0, 3, 9324, 443},
                                          {1, 1, 3, 4},     {1, 1, 419, 56}, {3, 1, 37, 14}, {5, 5, 36599, 1226}};
    CHECK(got == want);
}

TEST_CASE("the listed tuple (2,3,968,99) is not coprime") {
    Solution s{3, 2, 3, 968, 99};
    CHECK(Int(968) * 968 + 25 * 1331 == Int(99) * 99 * 99);
    CHECK(gcd(Int(968), Int(99)) == 11);
    CHECK_FALSE(verify_solution(s));
}

TEST_CASE("sixth powers up to 100") {
    SearchRange r;
    r.y_max = 100;
    r.n_set = {6};
    auto sols = enumerate_solutions(r);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == Solution{6, 1, 1, 3, 2});
}

TEST_CASE("fourth powers up to 2000 are empty") {
    SearchRange r;
    r.y_max = 2000;
    r.n_set = {4};
    CHECK(enumerate_solutions(r).empty());
}

TEST_CASE("y_max = 2 gives nothing") {
    SearchRange r;
    r.y_max = 2;
    CHECK(enumerate_solutions(r).empty());
}

TEST_CASE("enumerator agrees with the x-walk oracle") {
    for (int n : {3, 4, 5, 6, 7}) {
        SearchRange r;
        r.y_max = n == 3 ? 150 : 40;
        r.n_set = {n};
        CHECK(enumerate_solutions(r) == oracle(r.y_max, n));
    }
}

TEST_CASE("parallel partitioning does not change the output") {
    SearchRange r;
    r.y_max = 800;
    r.n_set = {3, 5};
    auto one = enumerate_solutions(r);
    r.jobs = 7;
    CHECK(enumerate_solutions(r) == one);
}

TEST_CASE("verify_solution") {
    CHECK(verify_solution({3, 1, 1, 3, 4}));
    CHECK_FALSE(verify_solution({3, 0, 0, 0, 1}));
    CHECK_FALSE(verify_solution({3, 0, 1, 4, 4}));
}

TEST_CASE("random probes outside the list fail verification") {
    SearchRange r;
    r.y_max = 300;
    auto sols = enumerate_solutions(r);
    std::mt19937 rng(7);
    for (int k = 0; k < 2000; ++k) {
        Solution s{3, unsigned(rng() % 8), unsigned(rng() % 6), Int(long(rng() % 5000) + 1), Int(long(rng() % 299) + 2)};
        bool listed = std::find(sols.begin(), sols.end(), s) != sols.end();
        CHECK(verify_solution(s) == listed);
    }
}

TEST_CASE("parity classes") {
    CHECK(classify_parity({3, 1, 1, 3, 4}) == ParityClass::XabOdd);
    CHECK(classify_parity({3, 0, 1, 4, 3}) == ParityClass::AtLeastOneEven);
    SearchRange r;
    r.y_max = 2000;
    r.n_set = {5, 7};
    for (const auto& s : enumerate_solutions(r)) CHECK(classify_parity(s) == ParityClass::XabOdd);
}

TEST_CASE("invalid ranges") {
    SearchRange r;
    r.y_max = 1;
    CHECK_THROWS_AS(validate(r), InputError);
    r.y_max = 10;
    r.n_set = {2};
    CHECK_THROWS_AS(validate(r), InputError);
    r.n_set = {3};
    r.y_max = 100000000;
    r.work_budget = 10;
    CHECK_THROWS_AS(enumerate_solutions(r), ResourceError);
}
