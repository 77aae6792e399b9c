#include "sympspin/analysis.hpp"
#include "sympspin/parse.hpp"
#include "sympspin/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sympspin;

namespace {

SectorSpec sector(int n, int h, int Q, const std::string& parity) {
    if (n < 1) {
        throw Error("n must be >= 1");
    }
    return SectorSpec{n, h, Q, parse_parity(parity)};
}

// JSON crosses the boundary as text; the Python side decodes it.
std::string verify_json(int n, int hMax, int Q, const std::string& parity, const std::string& suites,
                        unsigned threads) {
    JobConfig cfg;
    cfg.n = n;
    cfg.hMax = hMax;
    cfg.Q = Q;
    cfg.parity = parse_parity(parity);
    cfg.suites = parse_suites(suites);
    cfg.threads = threads;
    std::vector<VerificationReport> reports;
    {
        py::gil_scoped_release release;
        reports = run_suites(cfg);
    }
    return verification_document(cfg, reports).dump(2);
}

std::vector<std::string> texts(const std::vector<SpinorPoly>& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) {
        out.push_back(p.str());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_sympspin, m) {
    m.doc() = "Exact symplectic spinor calculus over Q(i)";
    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    m.attr("CONVENTION") = kConventionNote;

    m.def(
        "normalize", [](const std::string& expr, int n) { return parse_spinor(expr, n).str(); }, py::arg("expr"),
        py::arg("n"), "Canonical text form of a spinor expression.");
    m.def(
        "apply",
        [](const std::string& op, const std::string& expr, int n) {
            return texts(parse_operator(op, n).apply(parse_spinor(expr, n)));
        },
        py::arg("op"), py::arg("expr"), py::arg("n"),
        "Apply an operator word; returns one spinor per component.");
    m.def(
        "sector_dim", [](int n, int h, int Q, const std::string& p) { return sector(n, h, Q, p).dimension(); },
        py::arg("n"), py::arg("h"), py::arg("Q"), py::arg("parity") = "both");
    m.def(
        "monogenic_dim", [](int n, int h, int Q, const std::string& p) { return monogenic_dim(sector(n, h, Q, p)); },
        py::arg("n"), py::arg("h"), py::arg("Q"), py::arg("parity") = "both");
    m.def(
        "twistor_kernel_dim",
        [](int n, int h, int Q, const std::string& p) { return twistor_kernel_dim(sector(n, h, Q, p)); },
        py::arg("n"), py::arg("h"), py::arg("Q"), py::arg("parity") = "both");
    m.def(
        "monogenic_basis",
        [](int n, int h, int Q, const std::string& p) { return texts(monogenics(sector(n, h, Q, p)).basis.polys()); },
        py::arg("n"), py::arg("h"), py::arg("Q"), py::arg("parity") = "both",
        "Canonical basis of Ker D_s on the sector.");
    m.def(
        "twistor_kernel_basis",
        [](int n, int h, int Q, const std::string& p) {
            return texts(twistor_kernel(sector(n, h, Q, p)).basis.polys());
        },
        py::arg("n"), py::arg("h"), py::arg("Q"), py::arg("parity") = "both",
        "Canonical basis of the joint kernel of the twistor components.");
    m.def("verify_json", &verify_json, py::arg("n") = 2, py::arg("h_max") = 3, py::arg("Q") = 4,
          py::arg("parity") = "both", py::arg("suites") = "all", py::arg("threads") = 0u);
}
