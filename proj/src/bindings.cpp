#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "specgraph/decompose.hpp"
#include "specgraph/io.hpp"
#include "specgraph/verdicts.hpp"

namespace py = pybind11;
using namespace specgraph;

namespace {

io::InputDocument document_from(const std::vector<std::string>& variables,
                                const std::string& ideal,
                                const std::string& quotient) {
    nlohmann::ordered_json doc;
    doc["variables"] = variables;
    if (quotient.empty())
        doc["J"] = nullptr;
    else
        doc["J"] = quotient;
    doc["I"] = ideal;
    return io::load_document(doc.dump());
}

std::vector<std::vector<std::string>> py_min_primes(
    const std::vector<std::string>& variables, const std::string& ideal) {
    io::InputDocument doc = document_from(variables, ideal, "");
    std::vector<std::vector<std::string>> out;
    for (MonomialPrime p : minimal_primes(doc.the_ideal()))
        out.push_back(io::render_prime(doc.ctx, p.vars));
    return out;
}

std::string py_analyze(const std::vector<std::string>& variables,
                       const std::string& ideal, const std::string& quotient) {
    io::InputDocument doc = document_from(variables, ideal, quotient);
    AnalysisReport report = analyze(doc.ctx, doc.ambient(), doc.the_ideal());
    return io::emit_report(doc, report, io::Format::Json);
}

std::string py_analyze_document(const std::string& json_text) {
    io::InputDocument doc = io::load_document(json_text);
    AnalysisReport report = analyze(doc.ctx, doc.ambient(), doc.the_ideal());
    return io::emit_report(doc, report, io::Format::Json);
}

std::vector<std::string> py_split(const std::vector<std::string>& variables,
                                  const std::string& ideal) {
    io::InputDocument doc = document_from(variables, ideal, "");
    std::vector<std::string> out;
    for (const SquarefreeIdeal& part : split_Hc(doc.the_ideal()))
        out.push_back(io::render_ideal(doc.ctx, part));
    return out;
}

std::string py_verify(const std::string& json_text) {
    return io::run_verify(io::load_document(json_text));
}

}  // namespace

PYBIND11_MODULE(specgraph, m) {
    m.doc() = "connectedness and indecomposability analysis for squarefree "
              "monomial ideals";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);

    m.def("minimal_primes", &py_min_primes, py::arg("variables"),
          py::arg("ideal"),
          "Minimal primes of a squarefree monomial ideal, e.g. "
          "minimal_primes(['x','y','z','w'], '(x*z,x*w,y*z,y*w)').");
    m.def("analyze", &py_analyze, py::arg("variables"), py::arg("ideal"),
          py::arg("quotient") = "",
          "Full report as a JSON string; quotient is the optional ideal J "
          "defining the ambient quotient ring.");
    m.def("analyze_document", &py_analyze_document, py::arg("document"),
          "Full report from an input document (JSON string).");
    m.def("split", &py_split, py::arg("variables"), py::arg("ideal"),
          "Component ideals of the top-dimensional prime graph.");
    m.def("verify", &py_verify, py::arg("document"),
          "Exhaustive oracle cross-check; raises on disagreement.");
}
