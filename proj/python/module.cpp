#include "lns/config.hpp"
#include "lns/error.hpp"
#include "lns/lucas.hpp"
#include "lns/padic.hpp"
#include "lns/report.hpp"
#include "lns/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <thread>

namespace py = pybind11;

namespace {

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

py::object big(const lns::Int& n) { return py::module_::import("builtins").attr("int")(n.get_str()); }

// Reports cross as JSON text; the Python side parses them.
template <class F>
std::string run(F&& f) {
    std::string out;
    {
        py::gil_scoped_release nogil;
        lns::Config cfg = lns::load_config();
        out = f(cfg).json().dump();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of lnsolve";

    // Translators are tried newest first, so the base class goes first.
    py::register_exception<lns::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<lns::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<lns::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<lns::MathMismatch>(m, "MathMismatch", PyExc_ArithmeticError);

    m.def("search_json", [](long ymax, std::vector<int> n, unsigned jobs) {
        return run([&](const lns::Config& c) { return lns::search_report(c, ymax, n, jobs); });
    }, py::arg("ymax"), py::arg("n"), py::arg("jobs") = default_jobs());

    m.def("descent3_json", [](const std::string& which, bool verify_point) {
        return run([&](const lns::Config& c) { return lns::descent3_report(c, which, verify_point); });
    }, py::arg("case"), py::arg("verify_point") = false);

    m.def("tm_reduce_json", [](std::optional<int> round) {
        return run([&](const lns::Config& c) { return lns::tm_reduce_report(c, round); });
    }, py::arg("round") = py::none());

    m.def("sieve_json", [](std::optional<std::array<int, 4>> alpha, std::optional<std::array<long, 3>> bounds,
                           unsigned jobs) {
        return run([&](const lns::Config& c) {
            const auto& pb = c.tm.published;
            lns::SieveBox box{pb.n1_final, pb.n2_final, pb.A_final};
            if (bounds) box = {(*bounds)[0], (*bounds)[1], (*bounds)[2]};
            std::optional<lns::AlphaCase> a;
            if (alpha) a = lns::AlphaCase{(*alpha)[0], (*alpha)[1], (*alpha)[2], (*alpha)[3]};
            return lns::sieve_report(c, a, box, jobs);
        });
    }, py::arg("case") = py::none(), py::arg("bounds") = py::none(), py::arg("jobs") = default_jobs());

    m.def("lucas_json", [](int d, long n) {
        return run([&](const lns::Config& c) { return lns::lucas_report(c, d, n); });
    }, py::arg("d"), py::arg("n"));

    m.def("n4_json", [] { return run([](const lns::Config& c) { return lns::n4_report(c); }); });

    m.def("verify_theorem_json", [](std::vector<int> n, std::optional<long> ymax, unsigned jobs) {
        return run([&](const lns::Config& c) { return lns::verify_theorem_report(c, n, ymax, jobs); });
    }, py::arg("n") = std::vector<int>{3, 4, 5, 6, 7}, py::arg("ymax") = py::none(), py::arg("jobs") = default_jobs());

    m.def("full_json", [](std::optional<std::array<long, 3>> bounds, bool skip_reduction, unsigned jobs) {
        return run([&](const lns::Config& c) {
            std::optional<lns::SieveBox> box;
            if (bounds) box = lns::SieveBox{(*bounds)[0], (*bounds)[1], (*bounds)[2]};
            return lns::full_report(c, skip_reduction, box, jobs);
        });
    }, py::arg("bounds") = py::none(), py::arg("skip_reduction") = false, py::arg("jobs") = default_jobs());

    m.def("solutions", [](long ymax, std::vector<int> n, unsigned jobs) {
        lns::SearchRange r;
        r.y_max = ymax;
        r.n_set = std::move(n);
        r.jobs = jobs;
        std::vector<lns::Solution> sols;
        {
            py::gil_scoped_release nogil;
            sols = lns::enumerate_solutions(r);
        }
        py::list out;
        for (const auto& s : sols) out.append(py::make_tuple(s.n, s.a, s.b, big(s.x), big(s.y)));
        return out;
    }, py::arg("ymax"), py::arg("n"), py::arg("jobs") = default_jobs(),
       "(n, a, b, x, y) with x^2 + 5^a 11^b = y^n, gcd(x, y) = 1, y <= ymax.");

    m.def("lucas_sequence", [](long u, long v, int d, long count) {
        auto seq = lns::lucas_sequence({lns::Int(u), lns::Int(v), d}, count);
        py::list out;
        for (const auto& t : seq) out.append(big(t));
        return out;
    }, py::arg("u"), py::arg("v"), py::arg("d"), py::arg("count"));

    m.def("hensel_digits", [](long p, std::size_t count) {
        auto cfg = lns::load_config();
        auto roots = lns::hensel_roots(cfg.quartic.defining_poly, lns::Int(p), static_cast<long>(count) + 5);
        std::vector<std::vector<unsigned long>> out;
        for (const auto& r : roots) out.push_back(r.digits(count));
        return out;
    }, py::arg("p"), py::arg("count") = 5);

    m.def("config_sha256", [] { return lns::load_config().sha256; });
}
