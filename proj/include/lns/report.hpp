#pragma once

// JSON reports shared by the command line tool, the acceptance runner and the
// Python module. Every report carries "pass" and a "checks" array; the layout
// is described by docs/report.schema.json.

#include "lns/config.hpp"
#include "lns/sieve.hpp"
#include "lns/thue_mahler.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lns {

using Json = nlohmann::ordered_json;

// Small integers become JSON numbers, anything wider a decimal string.
Json to_json(const Int& n);

class Report {
public:
    Report(std::string command, const Config& cfg);

    void check(const std::string& name, bool pass, Json detail = nullptr);
    // Published value versus ours; never affects pass() unless strict.
    void compare(const std::string& name, Json published, Json computed, bool match);
    void set(const std::string& key, Json value) { body_[key] = std::move(value); }
    void param(const std::string& key, Json value) { params_[key] = std::move(value); }

    bool pass() const;
    bool golden_match() const;
    void set_strict(bool s) { strict_ = s; }

    Json json() const;

private:
    std::string command_;
    Json config_, params_, checks_ = Json::array(), golden_ = Json::array(), body_ = Json::object();
    bool strict_ = false;
};

Report search_report(const Config& cfg, long y_max, const std::vector<int>& n_set, unsigned jobs);
Report descent3_report(const Config& cfg, const std::string& which, bool verify_point);
// round unset: every scheduled round.
Report tm_reduce_report(const Config& cfg, std::optional<int> round);
// alpha unset: all 18 classes.
Report sieve_report(const Config& cfg, std::optional<AlphaCase> alpha, const SieveBox& box, unsigned jobs);
Report lucas_report(const Config& cfg, int d, long n);
Report n4_report(const Config& cfg);
Report verify_theorem_report(const Config& cfg, const std::vector<int>& n_set, std::optional<long> y_max,
                             unsigned jobs);
Report full_report(const Config& cfg, bool skip_reduction, std::optional<SieveBox> bounds, unsigned jobs);

Json to_json(const ReductionSummary& s);
Json to_json(const ReductionRoundResult& r);
Json to_json(const SieveCaseTrace& t);

// Runs sieve_case over the given classes with up to jobs threads; output
// order follows the input.
std::vector<SieveCaseTrace> sieve_cases(const Config& cfg, const std::vector<AlphaCase>& cases, const SieveBox& box,
                                        unsigned jobs);

}  // namespace lns
