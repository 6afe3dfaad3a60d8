#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fourierlab/catalog.hpp"
#include "fourierlab/errors.hpp"
#include "fourierlab/json_io.hpp"
#include "fourierlab/parser.hpp"
#include "fourierlab/reconstruct.hpp"

namespace py = pybind11;
using namespace fourierlab;

// Results cross the boundary as JSON text; the Python wrapper decodes them.

namespace {

IndexMode index_mode(const std::string& name) {
  if (name == "all") return IndexMode::all;
  if (name == "even") return IndexMode::even_part;
  if (name == "odd") return IndexMode::odd_part;
  if (name == "alternating") return IndexMode::alternate_sign;
  throw InvalidArgument("index must be all, even, odd or alternating, got '" + name + "'");
}

SeriesExpression series(const std::string& expr, const std::string& index, const std::optional<std::string>& x) {
  ProductExpression e = parse_series(expr);
  if (x) e = e.substitute(parse_angle(*x));
  return index_transform(expand_products(e), index_mode(index));
}

std::vector<PiPoly> basis_from(const std::vector<std::string>& names) {
  std::vector<PiPoly> out;
  for (const auto& n : names) out.push_back(parse_pipoly(n));
  return out;
}

std::string exact_sum(const std::string& expr, const std::string& index, const std::optional<std::string>& x,
                      int digits) {
  const PiPoly v = sum_closed_form(series(expr, index, x));
  Json j = {{"exact", v.str()}, {"coeffs", to_json(v)}, {"decimal", to_decimal(v, digits).text}};
  return j.dump();
}

std::string numeric_sum(const std::string& expr, long N, int digits, const std::string& index,
                        const std::optional<std::string>& x) {
  return to_json(partial_sum(series(expr, index, x), N, digits)).dump();
}

std::string coefficients(const std::string& function_json) {
  const PiecewiseFunction f = piecewise_from_json(Json::parse(function_json));
  if (f.domain() == DomainKind::full) return to_json(full_coefficients(f)).dump();
  return to_json(sine_coefficients(f)).dump();
}

std::string parseval(const std::string& function_json) {
  return to_json(parseval_check(piecewise_from_json(Json::parse(function_json)))).dump();
}

std::optional<std::string> recognize(const std::string& value, const std::vector<std::string>& basis,
                                     std::optional<int> digits) {
  const auto r = recognize_constant(parse_rational(value), basis_from(basis), digits.value_or(fractional_digits(value)));
  if (!r) return std::nullopt;
  return to_json(*r).dump();
}

std::string verify(const std::string& id, const std::string& mode, int digits, long N) {
  if (mode != "exact" && mode != "numeric") throw InvalidArgument("mode must be exact or numeric");
  VerificationReport r = verify_identity(id, mode == "exact" ? CheckMode::exact : CheckMode::numeric, digits, N);
  Json j = to_json(r);
  j.erase("runtime_seconds");
  return j.dump();
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> out;
  for (const auto& id : list_identities()) out.push_back(id.id);
  return out;
}

std::string reconstruct_target(const std::string& expr, long N, int samples, const std::vector<std::string>& basis) {
  ReconstructOptions options;
  options.N = N;
  options.samples = samples;
  options.basis = basis_from(basis);
  return to_json(reconstruct(expand_products(parse_series(expr)), options)).dump();
}

std::string crossing(const std::string& first, const std::string& second, double lo, double hi, long N, int digits) {
  return to_json(find_crossing(parse_series(first), parse_series(second), lo, hi, N, digits)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact and numeric evaluation of trigonometric series";

  static py::exception<NotClosedForm> not_closed_form(m, "NotClosedForm", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotClosedForm& e) {
      not_closed_form(e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const UnknownIdentity& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("exact_sum", &exact_sum, py::arg("expr"), py::arg("index") = "all", py::arg("x") = py::none(),
        py::arg("digits") = 30);
  m.def("partial_sum", &numeric_sum, py::arg("expr"), py::arg("N") = 1000000, py::arg("digits") = 30,
        py::arg("index") = "all", py::arg("x") = py::none(), py::call_guard<py::gil_scoped_release>());
  m.def("coefficients", &coefficients, py::arg("function_json"));
  m.def("parseval", &parseval, py::arg("function_json"));
  m.def("recognize", &recognize, py::arg("value"), py::arg("basis") = std::vector<std::string>{"1", "pi"},
        py::arg("digits") = py::none());
  m.def("verify", &verify, py::arg("id"), py::arg("mode") = "exact", py::arg("digits") = 30,
        py::arg("N") = 1000000, py::call_guard<py::gil_scoped_release>());
  m.def("identity_ids", &identity_ids);
  m.def("reconstruct", &reconstruct_target, py::arg("expr"), py::arg("N") = 100000, py::arg("samples") = 2000,
        py::arg("basis") = std::vector<std::string>{"1", "pi"}, py::call_guard<py::gil_scoped_release>());
  m.def("find_crossing", &crossing, py::arg("first"), py::arg("second"), py::arg("lo"), py::arg("hi"),
        py::arg("N") = 1000000, py::arg("digits") = 9, py::call_guard<py::gil_scoped_release>());
}
