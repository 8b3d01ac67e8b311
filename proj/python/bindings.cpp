#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zlab/alexlab.hpp"
#include "zlab/report.hpp"

namespace py = pybind11;

namespace {

zlab::ReportOptions options(std::uint64_t seed, bool trace) {
  zlab::ReportOptions o;
  o.seed = seed;
  o.trace = trace;
  return o;
}

zlab::Curve curve_of(const std::string& poly, long radicand) {
  zlab::FieldDescriptor f = radicand == 0 ? zlab::FieldDescriptor() : zlab::FieldDescriptor(zlab::Rational(radicand));
  return zlab::Curve(zlab::parse_polynomial(poly, f));
}

}  // namespace

PYBIND11_MODULE(_zlab, m) {
  m.doc() = "exact singularity, torus-type and Alexander polynomial computations";
  py::register_exception<zlab::Error>(m, "ZlabError", PyExc_ValueError);

  // reports come back as JSON text; the Python package decodes them
  m.def("classify", [](const std::string& text, std::uint64_t seed, bool trace) {
    return zlab::classify_report(zlab::parse_curve_file(text), options(seed, trace)).dump();
  }, py::arg("text"), py::arg("seed") = 0x5eedULL, py::arg("trace") = false);
  m.def("torus_check", [](const std::string& text, std::uint64_t seed, bool trace) {
    return zlab::torus_check_report(zlab::parse_curve_file(text), options(seed, trace)).dump();
  }, py::arg("text"), py::arg("seed") = 0x5eedULL, py::arg("trace") = false);
  m.def("alexander", [](const std::string& text, std::uint64_t seed) {
    return zlab::alexander_report(zlab::parse_curve_file(text), options(seed, false)).dump();
  }, py::arg("text"), py::arg("seed") = 0x5eedULL);
  m.def("semi_torus_verify", [](const std::string& text, std::uint64_t seed) {
    return zlab::semi_torus_report(zlab::parse_curve_file(text), options(seed, false)).dump();
  }, py::arg("text"), py::arg("seed") = 0x5eedULL);
  m.def("pair", [](const std::string& a, const std::string& b, std::uint64_t seed) {
    return zlab::pair_report(zlab::parse_curve_file(a), zlab::parse_curve_file(b), options(seed, false)).dump();
  }, py::arg("a"), py::arg("b"), py::arg("seed") = 0x5eedULL);
  m.def("family_6a2", [](const std::string& params, std::uint64_t seed) {
    return zlab::family_6a2_report(zlab::parse_6a2_params(params), options(seed, false)).dump();
  }, py::arg("params"), py::arg("seed") = 0x5eedULL);
  m.def("corpus_verify", [](std::uint64_t seed) { return zlab::corpus_verify_report(options(seed, false)).dump(); },
        py::arg("seed") = 0x5eedULL);

  m.def("corpus_names", [] {
    std::vector<std::string> out;
    for (const auto& [file, text] : zlab::embedded_corpus()) out.push_back(file);
    return out;
  });
  m.def("corpus_text", [](const std::string& name) {
    for (const auto& [file, text] : zlab::embedded_corpus())
      if (file == name || file == name + ".curve") return text;
    throw zlab::Error(zlab::ErrorKind::InvalidArgument, "no corpus curve " + name);
  });

  // direct helpers on a polynomial over Q(sqrt(radicand))
  m.def("configuration", [](const std::string& poly, long radicand) {
    return zlab::configuration(curve_of(poly, radicand)).to_string();
  }, py::arg("poly"), py::arg("radicand") = 0);
  m.def("torus_verdict", [](const std::string& poly, long radicand, std::uint64_t seed) {
    return std::string(zlab::to_string(zlab::tokunaga_search(curve_of(poly, radicand), seed).verdict));
  }, py::arg("poly"), py::arg("radicand") = 0, py::arg("seed") = 0x5eedULL);
  m.def("alexander_delta", [](const std::string& poly, long radicand) {
    return zlab::alexander_polynomial(curve_of(poly, radicand)).delta;
  }, py::arg("poly"), py::arg("radicand") = 0);
  m.def("normalize", [](const std::string& poly, long radicand) {
    return zlab::to_string(curve_of(poly, radicand).f);
  }, py::arg("poly"), py::arg("radicand") = 0);
}
