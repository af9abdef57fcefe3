// lns: command line front end. Prints one JSON report per run.
// Exit status: 0 all checks pass, 1 mathematical mismatch, 2 input or
// configuration error.

#include "lns/config.hpp"
#include "lns/error.hpp"
#include "lns/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

std::vector<long> parse_list(const std::string& s, std::size_t want, const char* what) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long v = std::stol(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw lns::InputError(std::string(what) + ": not an integer list: " + s);
        }
    }
    if (out.size() != want) {
        throw lns::InputError(std::string(what) + ": expected " + std::to_string(want) + " comma separated integers");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver toolkit for x^2 + 5^a 11^b = y^n"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool strict = false;
    std::string trace_path;
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--strict", strict, "treat differences from published values as failures");

    long ymax = 0;
    std::vector<int> n_list;
    auto* search = app.add_subcommand("search", "exhaustive search over y <= ymax");
    search->add_option("--ymax", ymax)->required()->check(CLI::Range(2L, 100000000L));
    search->add_option("--n", n_list)->required()->delimiter(',')->check(CLI::Range(3, 64));

    std::string dcase;
    bool verify_point = false;
    auto* descent = app.add_subcommand("descent3", "the cubic descent");
    descent->add_option("--case", dcase)->required()->check(CLI::IsMember({"i0", "i1"}));
    descent->add_flag("--verify-point", verify_point);

    int round = 0;
    bool all_rounds = false;
    auto* tm = app.add_subcommand("tm-reduce", "bound reduction for the Thue-Mahler equation");
    auto* round_opt = tm->add_option("--round", round)->check(CLI::PositiveNumber);
    auto* all_opt = tm->add_flag("--all", all_rounds);
    round_opt->excludes(all_opt);
    tm->require_option(1);

    std::string sieve_case_arg, sieve_bounds;
    bool sieve_all = false;
    auto* sieve = app.add_subcommand("sieve", "congruence sieve over the exponent box");
    auto* case_opt = sieve->add_option("--case", sieve_case_arg, "i1,i2,j1,j2");
    auto* sall_opt = sieve->add_flag("--all", sieve_all);
    sieve->add_option("--bounds", sieve_bounds, "n1,n2,A (default: published box)");
    case_opt->excludes(sall_opt);

    int d = 0;
    long n = 0;
    auto* lucas = app.add_subcommand("lucas", "Lucas sequence argument for prime n >= 5");
    lucas->add_option("--d", d)->required()->check(CLI::IsMember({1, 5, 11, 55}));
    lucas->add_option("--n", n)->required();

    bool n4_verify = false;
    auto* n4 = app.add_subcommand("n4", "the case n = 4");
    n4->add_flag("--verify", n4_verify)->required();

    std::vector<int> vt_n{3, 4, 5, 6, 7};
    long vt_ymax = 0;
    auto* vt = app.add_subcommand("verify-theorem", "search against the complete list of solutions");
    vt->add_option("--n", vt_n)->delimiter(',')->check(CLI::Range(3, 64));
    vt->add_option("--ymax", vt_ymax)->check(CLI::Range(2L, 100000000L));

    bool skip_reduction = false;
    std::string full_bounds;
    auto* full = app.add_subcommand("full", "reduction, sieve and verdict");
    full->add_flag("--skip-reduction", skip_reduction);
    full->add_option("--bounds", full_bounds, "n1,n2,A");
    full->add_option("--trace-json", trace_path, "write the complete trace here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (*sieve && !sieve_all && sieve_case_arg.empty()) throw lns::InputError("sieve: give --case or --all");
        if (*full && skip_reduction && full_bounds.empty()) {
            throw lns::InputError("full: --skip-reduction needs --bounds");
        }
        lns::Config cfg = lns::load_config();

        auto box_from = [](const std::string& s) {
            auto v = parse_list(s, 3, "--bounds");
            if (v[0] < 0 || v[1] < 0 || v[2] < 0) throw lns::InputError("--bounds must be non-negative");
            return lns::SieveBox{v[0], v[1], v[2]};
        };

        std::optional<lns::Report> rep;
        if (*search) {
            rep = lns::search_report(cfg, ymax, n_list, jobs);
        } else if (*descent) {
            rep = lns::descent3_report(cfg, dcase, verify_point);
        } else if (*tm) {
            rep = lns::tm_reduce_report(cfg, all_rounds ? std::nullopt : std::optional<int>(round));
        } else if (*sieve) {
            const auto& pb = cfg.tm.published;
            lns::SieveBox box{pb.n1_final, pb.n2_final, pb.A_final};
            if (!sieve_bounds.empty()) box = box_from(sieve_bounds);
            std::optional<lns::AlphaCase> alpha;
            if (!sieve_all) {
                auto v = parse_list(sieve_case_arg, 4, "--case");
                alpha = lns::AlphaCase{int(v[0]), int(v[1]), int(v[2]), int(v[3])};
            }
            rep = lns::sieve_report(cfg, alpha, box, jobs);
        } else if (*lucas) {
            rep = lns::lucas_report(cfg, d, n);
        } else if (*n4) {
            rep = lns::n4_report(cfg);
        } else if (*vt) {
            rep = lns::verify_theorem_report(cfg, vt_n, vt_ymax ? std::optional<long>(vt_ymax) : std::nullopt, jobs);
        } else if (*full) {
            std::optional<lns::SieveBox> bounds;
            if (!full_bounds.empty()) bounds = box_from(full_bounds);
            rep = lns::full_report(cfg, skip_reduction, bounds, jobs);
        }
        rep->set_strict(strict);
        lns::Json j = rep->json();
        if (!trace_path.empty()) {
            std::ofstream out(trace_path);
            if (!out) throw lns::InputError("cannot write " + trace_path);
            out << j.dump(2) << "\n";
        }
        if (*full) {
            // The per-case traces only go to --trace-json.
            if (j.contains("reduction")) j["reduction"] = {{"final", j["reduction"]["final"]}};
            if (j.contains("sieve")) j["sieve"].erase("traces");
        }
        std::cout << j.dump(2) << "\n";
        return rep->pass() ? kPass : kMismatch;
    } catch (const lns::MathMismatch& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const lns::PrecisionError& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return kMismatch;
    } catch (const lns::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
