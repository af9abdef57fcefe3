#include "lns/search.hpp"

#include "lns/error.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace lns {

bool solution_less(const Solution& lhs, const Solution& rhs) {
    if (lhs.n != rhs.n) return lhs.n < rhs.n;
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    if (lhs.x != rhs.x) return lhs.x < rhs.x;
    return lhs.y < rhs.y;
}

void validate(const SearchRange& range) {
    if (range.y_max < 2) throw InputError("search range needs yMax >= 2");
    if (range.n_set.empty()) throw InputError("search range needs at least one exponent n");
    for (int n : range.n_set)
        if (n < 3) throw InputError("exponent n must be >= 3, got " + std::to_string(n));
}

double estimated_work(const SearchRange& range) {
    double total = 0;
    for (int n : range.n_set) {
        const double lg = n * std::log(static_cast<double>(range.y_max));
        total += range.y_max * (lg / std::log(5.0) + 1) * (lg / std::log(11.0) + 1);
    }
    return total;
}

namespace {

void search_block(long y_lo, long y_hi, const std::vector<int>& ns, std::vector<Solution>& out) {
    for (long yv = y_lo; yv <= y_hi; ++yv) {
        const Int y = yv;
        for (int n : ns) {
            const Int yn = ipow(y, static_cast<unsigned long>(n));
            // a <= log_5(y^n), b <= log_11(y^n): the loops stop once 5^a 11^b >= y^n.
            Int five_a = 1;
            for (unsigned a = 0; five_a < yn; ++a, five_a *= 5) {
                Int c = five_a;
                for (unsigned b = 0; c < yn; ++b, c *= 11) {
                    const Int rest = yn - c;
                    if (!is_square(rest)) continue;
                    const Int x = isqrt(rest);
                    if (x == 0 || gcd(x, y) != 1) continue;
                    out.push_back(Solution{n, a, b, x, y});
                }
            }
        }
    }
}

}  // namespace

std::vector<Solution> enumerate_solutions(const SearchRange& range) {
    validate(range);
    if (estimated_work(range) > range.work_budget)
        throw ResourceError("search range exceeds the configured work budget");

    std::vector<int> ns = range.n_set;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    const unsigned jobs = std::max(1u, std::min<unsigned>(range.jobs, 64));
    std::vector<std::vector<Solution>> parts(jobs);
    if (jobs == 1) {
        search_block(1, range.y_max, ns, parts[0]);
    } else {
        std::vector<std::thread> workers;
        const long chunk = (range.y_max + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const long lo = 1 + j * chunk;
            const long hi = std::min(range.y_max, lo + chunk - 1);
            if (lo > hi) break;
            workers.emplace_back([lo, hi, &ns, &part = parts[j]] { search_block(lo, hi, ns, part); });
        }
        for (auto& w : workers) w.join();
    }

    std::vector<Solution> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end(), solution_less);
    return all;
}

bool verify_solution(const Solution& s) {
    if (s.n < 3 || s.x < 1 || s.y < 1) return false;
    if (gcd(s.x, s.y) != 1) return false;
    return s.x * s.x + ipow(5, s.a) * ipow(11, s.b) == ipow(s.y, static_cast<unsigned long>(s.n));
}

std::string to_string(ParityClass c) {
    switch (c) {
        case ParityClass::AtLeastOneEven: return "at-least-one-even";
        case ParityClass::AbOddXEven: return "ab-odd-x-even";
        case ParityClass::XabOdd: return "xab-odd";
    }
    return "unknown";
}

ParityClass classify_parity(const Solution& s) {
    if (s.a % 2 == 0 || s.b % 2 == 0) return ParityClass::AtLeastOneEven;
    if (mpz_even_p(s.x.get_mpz_t())) return ParityClass::AbOddXEven;
    return ParityClass::XabOdd;
}

}  // namespace lns
