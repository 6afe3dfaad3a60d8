#include "fourierlab/json_io.hpp"

#include "fourierlab/errors.hpp"

namespace fourierlab {
namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidArgument("expected a rational string such as \"-1/2\", got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidArgument(std::string("missing field '") + name + "'");
  return j.at(name);
}

Json doubles(const std::vector<double>& v) {
  Json out = Json::array();
  for (double d : v) out.push_back(d);
  return out;
}

const char* to_string(DomainKind d) { return d == DomainKind::half ? "half" : "full"; }

const char* to_string(Parity p) {
  switch (p) {
    case Parity::odd:
      return "odd";
    case Parity::even:
      return "even";
    case Parity::none:
      return "none";
  }
  return "none";
}

Json details_to_json(const std::vector<std::pair<std::string, std::string>>& details) {
  Json out = Json::array();
  for (const auto& [k, v] : details) out.push_back({{"key", k}, {"value", v}});
  return out;
}

Json interval_to_json(const Interval& v) {
  return {{"lo", to_json(v.lo.at)}, {"lo_closed", v.lo.closed}, {"hi", to_json(v.hi.at)}, {"hi_closed", v.hi.closed}};
}

}  // namespace

Json to_json(const PiPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  if (out.empty()) out.push_back("0");
  return out;
}

PiPoly pipoly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("a pi-polynomial is a list of rational strings, got " + j.dump());
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return PiPoly(std::move(coeffs));
}

Json to_json(const Angle& a) { return {{"r", to_string(a.r)}, {"s", to_string(a.s)}}; }

Angle angle_from_json(const Json& j) {
  return Angle(rational_from_json(field(j, "r")), j.contains("s") ? rational_from_json(j.at("s")) : Rational(0));
}

Json to_json(const PiecewiseFunction& f) {
  Json pieces = Json::array();
  for (const auto& piece : f.pieces()) {
    Json coeffs = Json::array();
    for (int k = 0; k <= piece.poly.degree(); ++k) coeffs.push_back(to_json(piece.poly.coeff(k)));
    pieces.push_back({{"lo", to_json(piece.lo)}, {"hi", to_json(piece.hi)}, {"coeffs", coeffs}});
  }
  return {{"domain", to_string(f.domain())}, {"parity", to_string(f.parity())}, {"pieces", pieces}};
}

PiecewiseFunction piecewise_from_json(const Json& j) {
  const std::string domain = j.is_object() && j.contains("domain") ? j.at("domain").get<std::string>() : "half";
  if (domain != "half" && domain != "full") throw InvalidArgument("domain must be \"half\" or \"full\"");
  const std::string parity = j.is_object() && j.contains("parity") ? j.at("parity").get<std::string>() : "none";
  Parity par = Parity::none;
  if (parity == "odd") {
    par = Parity::odd;
  } else if (parity == "even") {
    par = Parity::even;
  } else if (parity != "none") {
    throw InvalidArgument("parity must be \"odd\", \"even\" or \"none\"");
  }
  std::vector<Piece> pieces;
  for (const auto& p : field(j, "pieces")) {
    std::vector<PiPoly> coeffs;
    for (const auto& c : field(p, "coeffs")) coeffs.push_back(pipoly_from_json(c));
    pieces.push_back({angle_from_json(field(p, "lo")), angle_from_json(field(p, "hi")), XPolynomial(coeffs)});
  }
  return PiecewiseFunction(std::move(pieces), domain == "half" ? DomainKind::half : DomainKind::full, par);
}

Json to_json(const CoefficientFormula& cf) {
  Json out = Json::array();
  for (const auto& t : cf.terms()) {
    out.push_back({{"c", to_json(t.c)},
                   {"kind", t.kind == TrigKind::sin ? "sin" : "cos"},
                   {"beta", to_json(t.beta)},
                   {"p", t.p}});
  }
  return out;
}

CoefficientFormula formula_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("a coefficient formula is a list of terms");
  CoefficientFormula out;
  for (const auto& t : j) {
    const std::string kind = field(t, "kind").get<std::string>();
    if (kind != "sin" && kind != "cos") throw InvalidArgument("term kind must be \"sin\" or \"cos\"");
    out.add(pipoly_from_json(field(t, "c")), kind == "sin" ? TrigKind::sin : TrigKind::cos,
            angle_from_json(field(t, "beta")), field(t, "p").get<int>());
  }
  return out;
}

Json to_json(const FullCoefficients& c) {
  return {{"a0", to_json(c.a0)}, {"a", to_json(c.a)}, {"b", to_json(c.b)}};
}

Json to_json(const ParsevalResult& r) {
  return {{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}};
}

Json to_json(const PartialSumResult& r) {
  return {{"N", r.N}, {"digits", r.digits}, {"value", r.text()}, {"tail_bound", r.tail_bound}};
}

Json to_json(const SampleSet& s) {
  return {{"source", s.source}, {"N", s.N}, {"error_bound", s.error_bound}, {"x", doubles(s.x)}, {"y", doubles(s.y)}};
}

Json to_json(const RecognitionResult& r) {
  Json relation = Json::array();
  for (const auto& m : r.relation) relation.push_back(m.get_str());
  return {{"candidate", to_json(r.candidate)},
          {"text", r.candidate.str()},
          {"relation", relation},
          {"residual", to_string(r.residual)},
          {"confidence_digits", r.confidence_digits}};
}

Json to_json(const SegmentationHypothesis& h) {
  Json bps = Json::array();
  for (const auto& b : h.breakpoints) bps.push_back(to_json(b));
  return {{"breakpoints", bps}, {"degrees", h.degrees}, {"continuity", h.continuity}};
}

Json to_json(const FitResult& r) {
  Json segments = Json::array();
  for (const auto& s : r.segments) {
    segments.push_back({{"lo", to_json(s.lo)},
                        {"hi", to_json(s.hi)},
                        {"coeffs", doubles(s.coeffs)},
                        {"std_errors", doubles(s.std_errors)},
                        {"rms", s.rms},
                        {"samples", s.samples}});
  }
  return {{"hypothesis", to_json(r.hypothesis)}, {"segments", segments}, {"rms", r.rms}, {"noise", r.noise}};
}

Json to_json(const RoundtripReport& r) {
  return {{"candidate", to_json(r.candidate)},
          {"formula_equal", r.formula_equal == FormulaComparison::equal},
          {"numeric_residuals", doubles(r.numeric_residuals)},
          {"verdict", to_string(r.verdict)}};
}

Json to_json(const ReconstructionReport& r) {
  Json out = {{"verified", r.verified()},
              {"hypothesis", to_json(r.hypothesis)},
              {"constraints",
               {{"continuity_order", r.constraints.continuity_order ? Json(*r.constraints.continuity_order) : Json()},
                {"zero_at_0", r.constraints.zero_at_0},
                {"zero_at_pi", r.constraints.zero_at_pi}}}};
  out["fit"] = r.fit ? to_json(*r.fit) : Json();
  out["roundtrip"] = r.roundtrip ? to_json(*r.roundtrip) : Json();
  out["failure"] = r.failure;
  return out;
}

Json to_json(const VerificationReport& r) {
  return {{"id", r.id},
          {"status", to_string(r.status)},
          {"details", details_to_json(r.details)},
          {"runtime_seconds", r.runtime_seconds}};
}

Json to_json(const CrossingResult& r) {
  return {{"x", r.x}, {"uncertainty", r.uncertainty}, {"slope", r.slope}, {"iterations", r.iterations}};
}

Json to_json(const Identity& id) {
  Json sums = Json::array();
  for (const auto& s : id.sums) {
    Json entry = {{"label", s.label}, {"expression", s.expr.str()}, {"index_mode", to_string(s.mode)}};
    if (s.validity) entry["validity"] = interval_to_json(*s.validity);
    if (s.known) entry["known"] = to_json(*s.known);
    sums.push_back(entry);
  }
  Json out = {{"id", id.id},
              {"description", id.description},
              {"expectation", to_string(id.expectation)},
              {"mode", to_string(id.mode)},
              {"sums", sums}};
  if (id.rhs) out["rhs"] = id.rhs->str();
  if (id.validity) out["validity"] = interval_to_json(*id.validity);
  if (id.function) {
    out["function"] = to_json(*id.function);
    out["coefficients"] = to_json(id.coefficients);
  }
  return out;
}

}  // namespace fourierlab
