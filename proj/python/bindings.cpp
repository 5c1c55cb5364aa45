// Python module artin._core. Diagrams cross the boundary in the text file
// format and reports come back as JSON text; python/artin decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "artin/certify.hpp"
#include "artin/report.hpp"
#include "artin/spherical.hpp"
#include "artin/surface.hpp"

namespace py = pybind11;
using namespace artin;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Artin group diagrams: analysis, surface checks, certificates";

  py::register_exception<DiagramError>(m, "DiagramError", PyExc_ValueError);
  py::register_exception<NotSmallType>(m, "NotSmallType", PyExc_ValueError);
  py::register_exception<UnsupportedLabels>(m, "UnsupportedLabels", PyExc_ValueError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  m.def("normalize", [](std::string const& text) { return serialize(parse_diagram(text)); },
        "Canonical text form of a diagram.");
  m.def("is_spherical", [](std::string const& text) { return is_spherical(parse_diagram(text)); });
  m.def(
      "analyze",
      [](std::string const& text, bool assume) {
        return to_json(analyze(parse_diagram(text), assume)).dump();
      },
      py::arg("text"), py::arg("assume_kpi1") = false);
  m.def(
      "certify",
      [](std::string const& text, bool assume) {
        return to_json(certify_trivial_center(parse_diagram(text), assume)).dump();
      },
      py::arg("text"), py::arg("assume_kpi1") = false);
  m.def("replay", [](std::string const& trace_json) {
    return replay(trace_from_json(Json::parse(trace_json)));
  });
  m.def("surface_suite", [](std::string const& text) {
    return to_json(run_surface_suite(parse_diagram(text))).dump();
  });
  m.def(
      "coxeter_order",
      [](std::string const& text, std::uint64_t cap) {
        return to_json(order_oracle(parse_diagram(text), cap)).dump();
      },
      py::arg("text"), py::arg("cap") = default_bfs_cap);
}
