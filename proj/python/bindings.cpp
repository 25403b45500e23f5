#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mixlink/cli.hpp"
#include "mixlink/covering.hpp"
#include "mixlink/errors.hpp"
#include "mixlink/geometry.hpp"
#include "mixlink/homogeneity.hpp"
#include "mixlink/identities.hpp"
#include "mixlink/link_certifier.hpp"
#include "mixlink/newton_boundary.hpp"
#include "mixlink/parser.hpp"
#include "mixlink/report.hpp"

namespace py = pybind11;
using namespace mixlink;

namespace {

py::object weighted(const std::optional<WeightedDegree>& w) {
  if (!w) return py::none();
  py::dict d;
  d["weights"] = w->weights;
  d["degree"] = w->degree;
  d["unique"] = w->unique;
  return d;
}

py::dict weights(const std::string& expr, std::size_t n) {
  const HomogeneityReport h = detect_weights(parse_polynomial(expr, n));
  py::dict d;
  d["radial"] = weighted(h.radial);
  d["polar"] = weighted(h.polar);
  d["strongly_polar"] = h.strongly_polar;
  d["strongly_polar_positive"] = h.strongly_polar_positive;
  return d;
}

std::string pullback_expr(const std::string& expr, const std::vector<int>& a, const std::vector<int>& b,
                          std::size_t n) {
  return pullback(parse_polynomial(expr, n), CoveringSpec(a, b)).to_string('w');
}

py::dict c_value(const std::string& expr, const std::vector<Complex>& z) {
  const CCertificate c = c_certificate(parse_polynomial(expr, z.size()), z);
  py::dict d;
  d["total"] = c.total;
  d["positive"] = c.positive;
  d["negative"] = c.negative;
  return d;
}

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"mixlink"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mixed polynomials, cyclic covering pull-backs and link certification";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("parse", [](const std::string& e, std::size_t n) { return parse_polynomial(e, n).to_string(); },
        py::arg("expr"), py::arg("n") = 0, "Canonical form of a polynomial expression.");
  m.def("evaluate", [](const std::string& e, const std::vector<Complex>& z) {
        return parse_polynomial(e, z.size()).evaluate(z);
      },
      py::arg("expr"), py::arg("z"));
  m.def("weights", &weights, py::arg("expr"), py::arg("n") = 0, "Radial and polar weights, if any.");
  m.def("is_convenient", [](const std::string& e, std::size_t n) { return is_convenient(parse_polynomial(e, n)).convenient; },
        py::arg("expr"), py::arg("n") = 0);
  m.def("pullback", &pullback_expr, py::arg("expr"), py::arg("a"), py::arg("b"), py::arg("n") = 0,
        "Pull-back by the mixed cyclic covering, in variables w.");
  m.def("covering_degree", [](const std::vector<int>& a, const std::vector<int>& b) {
        return covering_degree(CoveringSpec(a, b));
      },
      py::arg("a"), py::arg("b"));
  m.def("c_certificate", &c_value, py::arg("expr"), py::arg("z"));
  m.def("run", &run, py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
