/// @file bindings.cpp
/// @brief Python bindings for the main operations: quivers and flips, flip
/// classes, toric Hasse/closure, toric total extensions, the rational
/// functions, and the verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toric/errors.hpp"
#include "toric/extensions.hpp"
#include "toric/greene.hpp"
#include "toric/io.hpp"
#include "toric/toric_poset.hpp"
#include "toric/verify.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

ExtensionMethod method_from_name(const std::string& name) {
    if (name == "brute") return ExtensionMethod::BruteForce;
    if (name == "partition") return ExtensionMethod::Partition;
    if (name == "recursive") return ExtensionMethod::Recursive;
    throw input_error("unknown method '" + name + "' (expected brute|partition|recursive)");
}

std::string quiver_repr(const Quiver& q) {
    std::ostringstream out;
    out << "Quiver(" << q.vertex_count() << ", [";
    const auto& arcs = q.arcs();
    for (size_t k = 0; k < arcs.size(); ++k) {
        if (k) out << ", ";
        out << "(" << arcs[k].first << ", " << arcs[k].second << ")";
    }
    out << "])";
    return out.str();
}

std::vector<std::vector<int>> words_of(const std::set<ToricTotalOrder>& orders) {
    std::vector<std::vector<int>> out;
    out.reserve(orders.size());
    for (const ToricTotalOrder& w : orders) out.push_back(w.word);
    return out;
}

} // namespace

PYBIND11_MODULE(_toricpsi, m) {
    m.doc() = "Exact computations on toric posets: sink-source flip classes of "
              "acyclic quivers and their rational functions";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<resource_limit_error>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::class_<Quiver>(m, "Quiver")
        .def(py::init<int, std::vector<Arc>>(), py::arg("n"), py::arg("arcs"))
        .def_property_readonly("n", &Quiver::vertex_count)
        .def_property_readonly("arcs", &Quiver::arcs)
        .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
        .def("__lt__", [](const Quiver& a, const Quiver& b) { return a < b; })
        .def("__hash__",
             [](const Quiver& q) {
                 size_t h = std::hash<int>{}(q.vertex_count());
                 for (const auto& [a, b] : q.arcs()) {
                     h = h * 1000003 + std::hash<int>{}(a * 4097 + b);
                 }
                 return h;
             })
        .def("__repr__", &quiver_repr);

    py::class_<RationalFunction>(m, "RationalFunction")
        .def_property_readonly("nvars", &RationalFunction::nvars)
        .def_property_readonly("is_zero", &RationalFunction::is_zero)
        .def_property_readonly("denominator",
                               [](const RationalFunction& f) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const LinearFactor& factor : f.denominator()) {
                                       out.emplace_back(factor.i, factor.j);
                                   }
                                   return out;
                               })
        .def_property_readonly("numerator_terms",
                               [](const RationalFunction& f) {
                                   std::vector<std::pair<std::string, std::vector<uint32_t>>> out;
                                   for (const auto& [mono, coeff] : f.numerator().terms()) {
                                       out.emplace_back(coeff.str(), mono);
                                   }
                                   return out;
                               })
        .def("__eq__", [](const RationalFunction& a,
                          const RationalFunction& b) { return rf_equal(a, b); })
        .def("__str__", &rf_to_string)
        .def("__repr__", [](const RationalFunction& f) {
            return "RationalFunction(" + rf_to_string(f) + ")";
        });

    m.def("parse_quiver",
          [](const std::string& text) { return parse_document(text).quiver; },
          py::arg("text"), "Parse the JSON document format and return its quiver");
    m.def("serialize_quiver",
          [](const Quiver& q) { return serialize_document(QuiverDocument{q}); },
          py::arg("quiver"), "Serialize a quiver to the JSON document format");

    m.def("is_acyclic", &is_acyclic, py::arg("quiver"));
    m.def("sources", &sources, py::arg("quiver"));
    m.def("sinks", &sinks, py::arg("quiver"));
    m.def("flip", &flip, py::arg("quiver"), py::arg("v"),
          "Reverse every arc at a source or sink vertex");
    m.def("linear_extensions", &linear_extensions, py::arg("quiver"));

    m.def("flip_class", &flip_class, py::arg("quiver"), py::arg("cap") = kDefaultClassCap,
          "All quivers reachable by sink-source flips, sorted");
    m.def("same_toric_poset", &same_toric_poset, py::arg("a"), py::arg("b"),
          "Flip equivalence via the flow-difference fingerprint");
    m.def("toric_hasse", &toric_hasse, py::arg("quiver"));
    m.def("toric_transitive_closure", &toric_transitive_closure, py::arg("quiver"));

    m.def(
        "toric_extensions",
        [](const Quiver& q, const std::string& method, size_t cap) {
            return words_of(ltor(q, method_from_name(method), cap));
        },
        py::arg("quiver"), py::arg("method") = "recursive", py::arg("cap") = kDefaultClassCap,
        "Toric total extensions of the flip class, each as its canonical rotation");
    m.def(
        "count_toric_extensions",
        [](const Quiver& q, const std::string& method, size_t cap) {
            return count_ltor(q, method_from_name(method), cap);
        },
        py::arg("quiver"), py::arg("method") = "recursive", py::arg("cap") = kDefaultClassCap);

    m.def("psi_poset", &psi_poset, py::arg("quiver"),
          "Greene's rational function of the induced poset");
    m.def(
        "psi_tor",
        [](const Quiver& q, const std::string& method) {
            return psi_tor(q, method_from_name(method));
        },
        py::arg("quiver"), py::arg("method") = "recursive",
        "The toric analogue, summed over the toric total extensions");

    m.def(
        "run_suite",
        [](const std::string& name, uint64_t seed, int max_n, int samples) {
            SuiteOptions options;
            options.seed = seed;
            options.max_n = max_n;
            options.samples = samples;
            const SuiteReport report = run_suite(name, options);
            return py::make_tuple(report.pass, report_to_text(report));
        },
        py::arg("name"), py::arg("seed") = kDefaultSuiteSeed, py::arg("max_n") = 0,
        py::arg("samples") = 0, "Run a verification suite; returns (pass, text report)");
    m.def("suite_names", &suite_names);
}
