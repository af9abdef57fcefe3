#pragma once

// Reduction of the bounds for the Thue-Mahler equation
//   x - theta y = +- alpha eps1^a1 eps2^a2 pi51^n1 pi111^n2
// in the quartic field: p-adic reduction at 5 and 11 followed by the
// archimedean reduction, repeated according to the configured schedule.

#include "lns/bigfloat.hpp"
#include "lns/config.hpp"
#include "lns/padic.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lns {

// alpha = pi2 pi131^i1 pi132^i2 pi52^j1 pi112^j2
struct AlphaCase {
    int i1 = 0, i2 = 0, j1 = 0, j2 = 0;
    std::string label() const;
    friend bool operator==(const AlphaCase&, const AlphaCase&) = default;
};

std::vector<AlphaCase> alpha_cases(const TMConstants& tm);

// Generator labels in the order used for exponent vectors.
const std::vector<std::string>& tm_generators();
// Exponents of alpha over tm_generators().
std::vector<long> alpha_exponents(const AlphaCase& c);

// Unknowns of the linear forms, in this order.
enum class TmVar { n1 = 0, n2 = 1, a1 = 2, a2 = 3 };
const char* var_name(int v);

struct TmBox {
    Int n1, n2, A;
    Int N() const { return n1 > n2 ? n1 : n2; }
};

// ceil(K / N) rounded up to one significant decimal digit.
Int lattice_weight(const Int& K, const Int& N);

struct PadicFormResult {
    int coordinate = 0;  // index in the basis {1, u, w, uw, w^2, uw^2}
    int divided_var = -1;
    long divisor_valuation = 0;
    bool constant_dominates = false;
    bool passed = false;
    Rat l_sq;
    Rat r_sq;
    Int n_bound;  // valid when passed
};

struct PadicCaseResult {
    AlphaCase alpha;
    Rat ord_lambda_const;  // ord_p(lambda) = this + n_p
    std::vector<PadicFormResult> forms;
    bool passed = false;
    Int n_bound;
    int best_form = -1;
};

struct PadicStepResult {
    long p = 0;
    long m = 0;
    bool m_from_schedule = false;
    Int weight;
    std::vector<PadicCaseResult> cases;
    bool passed = false;
    Int rigorous_bound;  // max over cases
    Int stated_bound;    // m + 1 when the rigorous bound allows it
};

struct RealCaseResult {
    AlphaCase alpha;
    int i0 = 0;
    long digits = 0;
    bool passed = false;
    double c15 = 0;
    double log_c21 = 0;
    double l = 0;  // lower bound of the distance, rounded for display
    Int A_main;
    Int A_balanced;
};

struct RealStepResult {
    Int weight;
    std::vector<RealCaseResult> cases;
    bool passed = false;
    Int A_bound;
};

struct ReductionRoundResult {
    int round = 0;
    TmBox in, out;
    PadicStepResult p5, p11;
    RealStepResult real;
};

struct ReductionSummary {
    std::vector<ReductionRoundResult> rounds;
    TmBox initial, final;
    bool passed = false;
};

class ThueMahlerReducer {
public:
    explicit ThueMahlerReducer(const Config& cfg);
    ~ThueMahlerReducer();
    ThueMahlerReducer(const ThueMahlerReducer&) = delete;
    ThueMahlerReducer& operator=(const ThueMahlerReducer&) = delete;

    const std::vector<AlphaCase>& cases() const { return cases_; }
    TmBox initial_box() const;

    // m unset: smallest m for which every case passes.
    PadicStepResult padic_step(long p, std::optional<long> m, const TmBox& box, const Int& weight) const;
    PadicCaseResult padic_case(long p, long m, const AlphaCase& alpha, const TmBox& box, const Int& weight) const;

    // digits unset: per case, smallest number of digits for which it passes.
    RealStepResult real_step(std::optional<long> digits, const TmBox& box, const Int& weight) const;
    RealCaseResult real_case(long digits, const AlphaCase& alpha, int i0, const TmBox& box, const Int& weight) const;

    ReductionRoundResult run_round(int round, const TmBox& in, const ReductionRound& sched) const;
    ReductionSummary run_all() const;

    // Coefficients alpha_{i,0..4} of the coordinate linear forms of
    // log_p(1 + lambda), for inspection.
    std::array<std::array<PadicInt, 5>, 6> padic_form_coefficients(long p, const AlphaCase& alpha) const;
    // rho0, lambda1, lambda2, mu1, mu2 for i0.
    std::array<Real, 5> real_form_coefficients(const AlphaCase& alpha, int i0, long digits) const;

private:
    struct PadicContext;
    struct RealContext;
    const PadicContext& padic_context(long p) const;
    const RealContext& real_context(long digits) const;

    const Config& cfg_;
    std::vector<AlphaCase> cases_;
    std::map<long, std::unique_ptr<PadicContext>> padic_;
    mutable std::map<long, std::unique_ptr<RealContext>> real_;
};

}  // namespace lns
