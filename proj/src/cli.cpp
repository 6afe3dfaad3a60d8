#include "fourierlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fourierlab/catalog.hpp"
#include "fourierlab/errors.hpp"
#include "fourierlab/fourier.hpp"
#include "fourierlab/json_io.hpp"
#include "fourierlab/numeric.hpp"
#include "fourierlab/parser.hpp"
#include "fourierlab/reconstruct.hpp"
#include "fourierlab/relation.hpp"

namespace fourierlab::cli {
namespace {

struct Config {
  int digits = 30;
  long N = 1000000;
  std::string format = "text";
};

int default_digits() {
  if (const char* env = std::getenv("FOURIERLAB_DIGITS")) {
    int digits = 0;
    try {
      digits = std::stoi(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("FOURIERLAB_DIGITS is not an integer: ") + env);
    }
    if (digits < 8) throw InvalidArgument("FOURIERLAB_DIGITS must be at least 8");
    return digits;
  }
  return 30;
}

IndexMode index_mode(const std::string& name) {
  if (name == "all") return IndexMode::all;
  if (name == "even") return IndexMode::even_part;
  if (name == "odd") return IndexMode::odd_part;
  if (name == "alternating") return IndexMode::alternate_sign;
  throw InvalidArgument("unknown index mode '" + name + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<PiPoly> parse_basis(const std::string& text) {
  std::vector<PiPoly> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_pipoly(item));
  if (out.empty()) throw InvalidArgument("empty basis");
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InvalidArgument("cannot open '" + path + "'");
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string pipoly_line(const PiPoly& p, int digits) { return p.str() + "  ~  " + to_decimal(p, digits).text; }

void strip_runtime(Json& report) { report.erase("runtime_seconds"); }

struct Commands {
  Commands(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  Config config;
  std::ostream& out;
  std::ostream& err;

  // sum
  std::string sum_expr;
  std::string sum_index = "all";
  std::string sum_x;
  std::string sum_mode = "both";

  int sum() {
    ProductExpression e = parse_series(sum_expr);
    if (e.has_x()) {
      if (sum_x.empty()) throw InvalidArgument("the expression depends on x; pass --x");
      e = e.substitute(parse_angle(sum_x));
    }
    const SeriesExpression series = index_transform(expand_products(e), index_mode(sum_index));
    Json j = {{"expression", e.str()}, {"index", sum_index}};
    std::optional<PiPoly> exact;
    if (sum_mode != "numeric") {
      try {
        exact = sum_closed_form(series);
      } catch (const NotClosedForm& nc) {
        if (config.format == "json") {
          out << Json{{"expression", e.str()}, {"error", nc.what()}}.dump(2) << "\n";
        } else {
          err << "not closed form: " << nc.what() << "\n"
              << "use --mode numeric for a partial sum with a tail bound\n";
        }
        return not_closed_form;
      }
      j["exact"] = to_json(*exact);
      j["exact_text"] = exact->str();
      j["decimal"] = to_decimal(*exact, config.digits).text;
    }
    std::optional<PartialSumResult> partial;
    if (sum_mode != "exact") {
      partial = partial_sum(series, config.N, config.digits);
      j["partial_sum"] = to_json(*partial);
    }
    if (config.format == "json") {
      out << j.dump(2) << "\n";
      return ok;
    }
    out << "series:  sum over n >= 1 of " << e.str();
    if (sum_index != "all") out << "  [" << sum_index << " n]";
    out << "\n";
    if (exact) {
      out << "exact:   " << exact->str() << "\n";
      out << "decimal: " << j["decimal"].get<std::string>() << "\n";
    }
    if (partial) {
      std::ostringstream bound;
      bound.precision(3);
      bound << partial->tail_bound;
      out << "partial: " << partial->text() << "  (N = " << partial->N << ", |tail| <= " << bound.str() << ")\n";
    }
    return ok;
  }

  // coeffs / parseval
  std::string function_path;

  int coeffs() {
    const PiecewiseFunction f = piecewise_from_json(read_json_file(function_path));
    if (f.domain() == DomainKind::full) {
      const FullCoefficients c = full_coefficients(f);
      if (config.format == "json") {
        out << to_json(c).dump(2) << "\n";
      } else {
        out << "a0  = " << c.a0.str() << "\n" << "a_n = " << c.a.str() << "\n" << "b_n = " << c.b.str() << "\n";
      }
      return ok;
    }
    Json j;
    std::string text;
    try {
      const CoefficientFormula b = sine_coefficients(f);
      j = {{"sine", to_json(b)}};
      text = "b_n = " + b.str();
    } catch (const NotInPiRing&) {
      // The (2/pi) factor leaves Q[pi]; report the integral instead.
      const CoefficientFormula integral = sine_integral(f);
      j = {{"sine_integral", to_json(integral)}};
      text = "b_n = (2/pi) * (" + integral.str() + ")";
    }
    if (config.format == "json") {
      out << j.dump(2) << "\n";
    } else {
      out << text << "\n";
    }
    return ok;
  }

  int parseval() {
    const PiecewiseFunction f = piecewise_from_json(read_json_file(function_path));
    const ParsevalResult r = parseval_check(f);
    if (config.format == "json") {
      out << to_json(r).dump(2) << "\n";
    } else {
      out << "(1/pi) integral of f^2:  " << pipoly_line(r.lhs, config.digits) << "\n"
          << "sum of squared coeffs:   " << pipoly_line(r.rhs, config.digits) << "\n"
          << "equal: " << (r.equal ? "yes" : "no") << "\n";
    }
    return r.equal ? ok : verification_failed;
  }

  // plot
  std::string plot_expr;
  std::string plot_grid = "0:pi:200";
  std::string plot_index = "all";
  bool plot_endpoints = false;

  int plot() {
    const ProductExpression e = parse_series(plot_expr);
    const auto parts = split(plot_grid, ':');
    if (parts.size() != 3) throw InvalidArgument("--grid must be lo:hi:count");
    Grid grid{parse_angle(parts[0]).approx(), parse_angle(parts[1]).approx(), std::stoi(parts[2]), !plot_endpoints};
    const IndexMode mode = index_mode(plot_index);
    SeriesAt at = [e, mode](const Angle& x) { return index_transform(expand_products(e.substitute(x)), mode); };
    const SampleSet s = sample_series(at, grid, config.N, e.str());
    if (config.format == "json") {
      out << to_json(s).dump() << "\n";
    } else {
      out << s.to_csv();
    }
    return ok;
  }

  // fit
  std::string fit_target;
  long fit_N = 100000;
  int fit_samples = 2000;
  std::string fit_basis = "1,pi";
  std::string fit_candidates;

  int fit() {
    const CoefficientFormula target = expand_products(parse_series(fit_target));
    ReconstructOptions options;
    options.N = fit_N;
    options.samples = fit_samples;
    options.basis = parse_basis(fit_basis);
    if (!fit_candidates.empty()) {
      for (const auto& c : split(fit_candidates, ',')) options.candidates.custom.push_back(parse_angle(c));
    }
    const ReconstructionReport r = reconstruct(target, options);
    if (config.format == "json") {
      Json j = {{"target", to_json(target)}};
      j["function"] = r.roundtrip ? to_json(r.roundtrip->candidate) : Json();
      j["report"] = to_json(r);
      out << j.dump(2) << "\n";
    } else {
      out << "target:      b_n = " << target.str() << "\n";
      out << "breakpoints:";
      for (std::size_t i = 0; i < r.hypothesis.breakpoints.size(); ++i) {
        out << " " << r.hypothesis.breakpoints[i].str();
        if (i < r.hypothesis.continuity.size()) out << " (C" << r.hypothesis.continuity[i] << ")";
      }
      out << (r.hypothesis.breakpoints.empty() ? " none\n" : "\n");
      if (r.roundtrip) {
        for (const auto& p : r.roundtrip->candidate.pieces()) {
          out << "  [" << p.lo.str() << ", " << p.hi.str() << "]: " << p.poly.str() << "\n";
        }
        out << "roundtrip:   " << to_string(r.roundtrip->verdict) << "\n";
      }
      if (!r.failure.empty()) out << "failure:     " << r.failure << "\n";
    }
    return r.verified() ? ok : verification_failed;
  }

  // recognize
  std::string recognize_value;
  std::string recognize_basis = "1,pi";
  int recognize_digits = 0;

  int recognize() {
    const Rational v = parse_rational(recognize_value);
    const int digits = recognize_digits > 0 ? recognize_digits : fractional_digits(recognize_value);
    const auto r = recognize_constant(v, parse_basis(recognize_basis), digits);
    if (config.format == "json") {
      out << (r ? to_json(*r) : Json{{"candidate", nullptr}}).dump(2) << "\n";
    } else if (r) {
      out << r->candidate.str() << "\n";
      out << "residual " << format_fixed(r->residual, digits + 4) << ", " << r->confidence_digits
          << " digits confirmed\n";
    } else {
      out << "no relation found\n";
    }
    return r ? ok : verification_failed;
  }

  // verify
  bool verify_all = false;
  std::vector<std::string> verify_ids;
  std::string verify_mode = "exact";
  bool verify_verbose = false;
  bool verify_timing = false;

  int verify() {
    if (verify_all == !verify_ids.empty()) throw InvalidArgument("pass exactly one of --all or --id");
    if (verify_mode != "exact" && verify_mode != "numeric") throw InvalidArgument("--mode must be exact or numeric");
    const CheckMode mode = verify_mode == "exact" ? CheckMode::exact : CheckMode::numeric;
    std::vector<const Identity*> selected;
    if (verify_all) {
      for (const auto& id : list_identities()) selected.push_back(&id);
    } else {
      for (const auto& name : verify_ids) selected.push_back(&find_identity(name));
    }
    Json reports = Json::array();
    int failures = 0;
    for (const Identity* id : selected) {
      const VerificationReport r = verify_identity(*id, mode, config.digits, config.N);
      if (r.status != Status::pass) ++failures;
      Json j = to_json(r);
      if (!verify_timing) strip_runtime(j);
      reports.push_back(j);
      if (config.format == "json") continue;
      out << to_string(r.status) << "  " << r.id;
      if (verify_timing) out << "  (" << r.runtime_seconds << " s)";
      out << "\n";
      if (verify_verbose || r.status != Status::pass) {
        for (const auto& [k, v] : r.details) out << "    " << k << ": " << v << "\n";
      }
    }
    if (config.format == "json") {
      out << reports.dump(2) << "\n";
    } else {
      out << selected.size() - failures << "/" << selected.size() << " passed\n";
    }
    return failures == 0 ? ok : verification_failed;
  }

  // catalog list
  int catalog_list() {
    if (config.format == "json") {
      Json all = Json::array();
      for (const auto& id : list_identities()) all.push_back(to_json(id));
      out << all.dump(2) << "\n";
    } else {
      for (const auto& id : list_identities()) out << id.id << "  " << id.description << "\n";
    }
    return ok;
  }

  // crossing
  std::string crossing_first;
  std::string crossing_second;
  std::string crossing_bracket = "0.5:1.5";

  int crossing() {
    const auto parts = split(crossing_bracket, ':');
    if (parts.size() != 2) throw InvalidArgument("--bracket must be lo:hi");
    const CrossingResult r = find_crossing(parse_series(crossing_first), parse_series(crossing_second),
                                           parse_angle(parts[0]).approx(), parse_angle(parts[1]).approx(),
                                           config.N, config.digits);
    if (config.format == "json") {
      out << to_json(r).dump(2) << "\n";
    } else {
      std::ostringstream os;
      os.precision(15);
      os << "x = " << r.x << " +- " << r.uncertainty << "  (slope " << r.slope << ", " << r.iterations
         << " iterations)\n";
      out << os.str();
    }
    return ok;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Commands cmd(out, err);
  CLI::App app{"Exact and numeric evaluation of trigonometric series", "fourierlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  try {
    cmd.config.digits = default_digits();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return usage_error;
  }
  auto common = [&cmd](CLI::App* sub, const std::string& formats) {
    sub->add_option("--digits", cmd.config.digits, "decimal digits for numeric output")
        ->check(CLI::Range(8, 10000));
    sub->add_option("--N", cmd.config.N, "number of terms in partial sums")->check(CLI::Range(1L, 1000000000L));
    sub->add_option("--format", cmd.config.format, "output format")->check(CLI::IsMember(split(formats, ',')));
  };

  auto* sum = app.add_subcommand("sum", "exact closed form and bounded partial sum of a series");
  sum->add_option("expr", cmd.sum_expr, "summand in n, e.g. \"(sin(n)/n)^2\"")->required();
  sum->add_option("--index", cmd.sum_index, "which n to sum over")
      ->check(CLI::IsMember({"all", "even", "odd", "alternating"}));
  sum->add_option("--x", cmd.sum_x, "value substituted for x");
  sum->add_option("--mode", cmd.sum_mode, "exact, numeric or both")->check(CLI::IsMember({"exact", "numeric", "both"}));
  common(sum, "text,json");

  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients of a piecewise polynomial");
  coeffs->add_option("function", cmd.function_path, "function JSON file, or - for stdin")->required();
  common(coeffs, "text,json");

  auto* parseval = app.add_subcommand("parseval", "check Parseval's identity exactly");
  parseval->add_option("function", cmd.function_path, "function JSON file, or - for stdin")->required();
  common(parseval, "text,json");

  auto* plot = app.add_subcommand("plot", "sample a series in x on a grid");
  plot->add_option("expr", cmd.plot_expr, "summand in n and x, e.g. \"sin(n*x)/n\"")->required();
  plot->add_option("--grid", cmd.plot_grid, "lo:hi:count");
  plot->add_option("--index", cmd.plot_index, "which n to sum over")
      ->check(CLI::IsMember({"all", "even", "odd", "alternating"}));
  plot->add_flag("--endpoints", cmd.plot_endpoints, "sample cell endpoints instead of midpoints");
  common(plot, "csv,json");

  auto* fit = app.add_subcommand("fit", "reconstruct the function with the given sine coefficients");
  fit->add_option("--target", cmd.fit_target, "coefficient formula in n, e.g. \"sin(n)^2/n^3\"")->required();
  fit->add_option("--N", cmd.fit_N, "terms per sample")->check(CLI::Range(1L, 100000000L));
  fit->add_option("--samples", cmd.fit_samples, "number of sample points")->check(CLI::Range(100, 100000));
  fit->add_option("--basis", cmd.fit_basis, "comma-separated recognition basis");
  fit->add_option("--candidates", cmd.fit_candidates, "extra breakpoint candidates, comma-separated");
  fit->add_option("--format", cmd.config.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* recognize = app.add_subcommand("recognize", "find a decimal as a rational combination of a basis");
  recognize->add_option("value", cmd.recognize_value, "decimal literal")->required();
  recognize->add_option("--basis", cmd.recognize_basis, "comma-separated basis, e.g. 1,pi,pi^2");
  recognize->add_option("--digits", cmd.recognize_digits, "trusted digits (default: as written)")
      ->check(CLI::Range(1, 1000));
  recognize->add_option("--format", cmd.config.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "verify identities from the built-in catalog");
  verify->add_flag("--all", cmd.verify_all, "every identity");
  verify->add_option("--id", cmd.verify_ids, "identity id (repeatable)");
  verify->add_option("--mode", cmd.verify_mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  verify->add_flag("--verbose", cmd.verify_verbose, "print details for passing identities too");
  verify->add_flag("--timing", cmd.verify_timing, "report runtimes");
  common(verify, "text,json");

  auto* catalog = app.add_subcommand("catalog", "inspect the identity catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list identity ids");
  list->add_option("--format", cmd.config.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* crossing = app.add_subcommand("crossing", "locate x where two series in x take equal values");
  crossing->add_option("first", cmd.crossing_first, "first summand")->required();
  crossing->add_option("second", cmd.crossing_second, "second summand")->required();
  crossing->add_option("--bracket", cmd.crossing_bracket, "lo:hi with a sign change");
  common(crossing, "text,json");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*sum) return cmd.sum();
    if (*coeffs) return cmd.coeffs();
    if (*parseval) return cmd.parseval();
    if (*plot) return cmd.plot();
    if (*fit) return cmd.fit();
    if (*recognize) return cmd.recognize();
    if (*verify) return cmd.verify();
    if (*list) return cmd.catalog_list();
    if (*crossing) return cmd.crossing();
  } catch (const NotClosedForm& e) {
    err << "not closed form: " << e.what() << "\n";
    return not_closed_form;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage_error;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return usage_error;
  } catch (const UnknownIdentity& e) {
    err << e.what() << "\n";
    return usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return verification_failed;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace fourierlab::cli
