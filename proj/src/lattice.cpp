#include "lns/lattice.hpp"

#include "lns/error.hpp"

#include <algorithm>
#include <utility>

namespace lns {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat ReducedBasis::gs_norm_sq(std::size_t i) const {
    Rat q(d[i + 1], d[i]);
    q.canonicalize();
    return q;
}

namespace {

// Cohen, integral LLL. lam[k][j] = d_{j+1} mu_{k,j}.
struct IntegralLll {
    IntMatrix b;
    std::vector<Int> d;
    std::vector<std::vector<Int>> lam;
    std::size_t n;

    explicit IntegralLll(IntMatrix basis) : b(std::move(basis)), n(b.size()) {
        d.assign(n + 1, 0);
        lam.assign(n, std::vector<Int>(n, 0));
    }

    void red(std::size_t k, std::size_t l) {
        const Int& dl = d[l + 1];
        if (2 * abs(Int(lam[k][l])) <= dl) return;
        // nearest integer to lam/dl
        Int q;
        Int num = 2 * lam[k][l] + dl;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Int(2 * dl).get_mpz_t());
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
        lam[k][l] -= q * dl;
        for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }

    void swap(std::size_t k) {
        std::swap(b[k], b[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        const Int lmb = lam[k][k - 1];
        const Int bnew = (d[k - 1] * d[k + 1] + lmb * lmb) / d[k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Int t = lam[i][k];
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lmb * t) / d[k];
            lam[i][k - 1] = (bnew * t + lmb * lam[i][k]) / d[k + 1];
        }
        d[k] = bnew;
    }

    void run() {
        d[0] = 1;
        // incremental Gram-Schmidt on the fly
        std::size_t kmax = 0;
        d[1] = dot(b[0], b[0]);
        if (d[1] == 0) throw DomainError("LLL: zero basis vector");
        std::size_t k = 1;
        while (k < n) {
            if (k > kmax) {
                kmax = k;
                for (std::size_t j = 0; j <= k; ++j) {
                    Int u = dot(b[k], b[j]);
                    for (std::size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
                    if (j < k)
                        lam[k][j] = u;
                    else {
                        if (u == 0) throw DomainError("LLL: dependent basis vectors");
                        d[k + 1] = u;
                    }
                }
            }
            red(k, k - 1);
            if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
                swap(k);
                if (k > 1) --k;
            } else {
                for (std::size_t l = k - 1; l-- > 0;) red(k, l);
                ++k;
            }
        }
    }
};

}  // namespace

ReducedBasis lll_reduce(IntMatrix basis) {
    if (basis.empty()) throw InputError("LLL: empty basis");
    IntegralLll alg(std::move(basis));
    alg.run();
    return {std::move(alg.b), std::move(alg.d)};
}

std::vector<Rat> lattice_coordinates(const IntMatrix& b, const std::vector<Int>& y) {
    // Solve s^T B = y^T, i.e. B^T s = y.
    const std::size_t n = b.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = b[c][r];
        m[r][n] = y[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) throw DomainError("lattice basis is singular");
        std::swap(m[piv], m[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rat> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = m[i][n] / m[i][i];
    return s;
}

DistanceBound distance_lower_bound(const ReducedBasis& rb, const std::vector<Int>& y) {
    const std::size_t n = rb.dim();
    DistanceBound out;
    if (std::all_of(y.begin(), y.end(), [](const Int& v) { return v == 0; })) {
        out.l_sq = Rat(dot(rb.basis[0], rb.basis[0]), Int(1) << static_cast<unsigned>(n - 1));
        out.l_sq.canonicalize();
        out.y_in_lattice = true;
        return out;
    }
    const auto s = lattice_coordinates(rb.basis, y);
    std::size_t i0 = n;
    for (std::size_t i = n; i-- > 0;) {
        if (s[i].get_den() != 1) {
            i0 = i;
            break;
        }
    }
    if (i0 == n) {
        out.y_in_lattice = true;
        out.l_sq = 0;
        return out;
    }
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), s[i0].get_num_mpz_t(), s[i0].get_den_mpz_t());
    Rat frac = s[i0] - Rat(fl);
    Rat sigma = frac <= Rat(1, 2) ? frac : Rat(1) - frac;
    Rat best = sigma * sigma * rb.gs_norm_sq(i0);
    for (std::size_t j = i0 + 1; j < n; ++j) best = std::min(best, rb.gs_norm_sq(j));
    out.l_sq = best;
    out.index = i0;
    out.sigma = sigma;
    return out;
}

}  // namespace lns
