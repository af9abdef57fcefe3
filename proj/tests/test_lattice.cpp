#include "lns/error.hpp"
#include "lns/lattice.hpp"
#include "lns/numberfield.hpp"

#include <doctest.h>

#include <random>

using namespace lns;

namespace {

struct Gso {
    std::vector<std::vector<Rat>> bstar;
    std::vector<std::vector<Rat>> mu;
};

Rat rdot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Gso gram_schmidt(const IntMatrix& b) {
    std::size_t n = b.size();
    Gso g;
    g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> v(b[i].begin(), b[i].end());
        for (std::size_t j = 0; j < i; ++j) {
            g.mu[i][j] = rdot(std::vector<Rat>(b[i].begin(), b[i].end()), g.bstar[j]) / rdot(g.bstar[j], g.bstar[j]);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= g.mu[i][j] * g.bstar[j][k];
        }
        g.bstar.push_back(v);
    }
    return g;
}

Rat gram_det(const IntMatrix& b) {
    std::vector<RatVec> m(b.size(), RatVec(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = Rat(dot(b[i], b[j]));
    return determinant(m);
}

IntMatrix random_basis(std::mt19937_64& rng, std::size_t n, long range) {
    std::uniform_int_distribution<long> dist(-range, range);
    for (;;) {
        IntMatrix b(n, std::vector<Int>(n));
        for (auto& row : b)
            for (auto& x : row) x = dist(rng);
        if (gram_det(b) != 0) return b;
    }
}

}  // namespace

TEST_CASE("LLL output is reduced and spans the same lattice") {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 5;
        CAPTURE(trial);
        IntMatrix b = random_basis(rng, n, 1000);
        auto rb = lll_reduce(b);
        REQUIRE(rb.dim() == n);
        CHECK(gram_det(rb.basis) == gram_det(b));

        auto g = gram_schmidt(rb.basis);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(rb.gs_norm_sq(i) == rdot(g.bstar[i], g.bstar[i]));
            for (std::size_t j = 0; j < i; ++j) CHECK(abs(g.mu[i][j]) <= Rat(1, 2));
            if (i > 0) {
                Rat lhs = rdot(g.bstar[i], g.bstar[i]);
                Rat rhs = (Rat(3, 4) - g.mu[i][i - 1] * g.mu[i][i - 1]) * rdot(g.bstar[i - 1], g.bstar[i - 1]);
                CHECK(lhs >= rhs);
            }
        }
        // Every new row has integral coordinates in the old basis.
        for (const auto& row : rb.basis) {
            for (const auto& c : lattice_coordinates(b, row)) CHECK(c.get_den() == 1);
        }
    }
}

TEST_CASE("known reduction") {
    IntMatrix b{{Int(1), Int(1), Int(1)}, {Int(-1), Int(0), Int(2)}, {Int(3), Int(5), Int(6)}};
    auto rb = lll_reduce(b);
    IntMatrix expect{{Int(0), Int(1), Int(0)}, {Int(1), Int(0), Int(1)}, {Int(-1), Int(0), Int(2)}};
    CHECK(rb.basis == expect);
    CHECK(rb.d.front() == 1);
    CHECK(rb.d.back() == gram_det(b));
}

TEST_CASE("distance lower bound never exceeds the true distance") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-60, 60);
    for (int trial = 0; trial < 25; ++trial) {
        CAPTURE(trial);
        IntMatrix b = random_basis(rng, 3, 20);
        auto rb = lll_reduce(b);
        std::vector<Int> y{Int(dist(rng)), Int(dist(rng)), Int(dist(rng))};
        auto bound = distance_lower_bound(rb, y);

        Int best = -1;
        const long R = 12;
        for (long i = -R; i <= R; ++i)
            for (long j = -R; j <= R; ++j)
                for (long k = -R; k <= R; ++k) {
                    Int d2 = 0;
                    for (int c = 0; c < 3; ++c) {
                        Int x = i * rb.basis[0][c] + j * rb.basis[1][c] + k * rb.basis[2][c] - y[c];
                        d2 += x * x;
                    }
                    if (best < 0 || d2 < best) best = d2;
                }
        CHECK(bound.l_sq <= Rat(best));
        CHECK(bound.y_in_lattice == (best == 0));
    }

    std::vector<Int> zero(3, Int(0));
    IntMatrix b{{Int(4), Int(1), Int(0)}, {Int(1), Int(5), Int(1)}, {Int(0), Int(2), Int(7)}};
    auto rb = lll_reduce(b);
    CHECK(distance_lower_bound(rb, zero).l_sq == Rat(dot(rb.basis[0], rb.basis[0])) / 4);
}

TEST_CASE("dependent rows are rejected") {
    IntMatrix b{{Int(1), Int(2)}, {Int(2), Int(4)}};
    CHECK_THROWS(lll_reduce(b));
}
