// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fourierlab/catalog.hpp"
#include "fourierlab/errors.hpp"
#include "fourierlab/fourier.hpp"
#include "fourierlab/numeric.hpp"
#include "fourierlab/reconstruct.hpp"
#include "fourierlab/relation.hpp"
#include "functions.hpp"
#include "properties.hpp"

using namespace fourierlab;
using testing::lin;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note << "failed: ";
    else note << "; ";
    note << what;
    pass = false;
  }
};

ProductExpression sin_n(const Angle& b, int power = 1) { return trig_factor(TrigKind::sin, AngleExpr{b, 0}, power); }
ProductExpression cos_n(const Angle& b, int power = 1) { return trig_factor(TrigKind::cos, AngleExpr{b, 0}, power); }
ProductExpression sin_x(int power) { return trig_factor(TrigKind::sin, AngleExpr{Angle(), 1}, power); }
ProductExpression inv(int p) { return inverse_n_power(p); }
ProductExpression sinc_pow(int m) { return (sin_n(1) * inv(1)).pow(m); }
PiPoly poly(std::vector<Rational> c) { return PiPoly(std::move(c)); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Every exact identity passes with zero tolerance, and the headline values hold.
void exact_sweep(Outcome& o) {
  int passed = 0;
  for (const auto& id : list_identities()) {
    if (id.mode != VerificationMode::exact) continue;
    const VerificationReport r = verify_identity(id, CheckMode::exact);
    o.require(r.status == Status::pass, id.id + " did not pass");
    if (r.status == Status::pass) ++passed;
  }
  o.require(passed >= 30, "only " + std::to_string(passed) + " exact identities passed");

  struct Headline {
    const char* id;
    std::size_t sums;
    PiPoly value;
  };
  const std::vector<Headline> headlines = {
      {"sinc-sum-equals-sum-of-squares", 2, lin(Rational(-1, 2), Rational(1, 2))},
      {"sinc-squared-quartic", 1, poly({Rational(1, 6), Rational(-1, 3), Rational(1, 6)})},
      {"even-sinc-sum", 2, lin(Rational(-1, 2), Rational(1, 4))},
      {"odd-sinc-sum", 2, lin(0, Rational(1, 4))},
      {"sinc-powers-times-sin3n", 4, lin(Rational(-3, 2), Rational(1, 2))},
      {"sinc-powers-times-cos", 3, lin(Rational(-1, 2), Rational(1, 4))},
      {"third-fourth-power-at-one", 2, lin(0, Rational(1, 4))},
      {"fifth-sixth-power-at-one", 2, lin(0, Rational(3, 16))},
  };
  for (const auto& h : headlines) {
    const Identity& id = find_identity(h.id);
    o.require(id.sums.size() == h.sums, std::string(h.id) + " has " + std::to_string(id.sums.size()) + " sums");
    for (const auto& s : id.sums) o.require(evaluate_series_sum(s) == h.value, s.label + " != " + h.value.str());
  }
  o.note << (o.pass ? "" : " ") << passed << " exact identities equal";
}

// 2. sum (sin n / n)^m for m = 1..7.
void sinc_powers(Outcome& o) {
  for (int m = 1; m <= 6; ++m) {
    const PiPoly v = evaluate_sum(sinc_pow(m));
    o.require(v.degree() == 1 && v.coeff(0) == Rational(-1, 2),
              "m = " + std::to_string(m) + " gives " + v.str());
  }
  const PiPoly seventh = evaluate_sum(sinc_pow(7));
  const PiPoly printed = poly({0, 129423, -201684, 144060, -54880, 11760, -1344, 64}) / Rational(46080) +
                         PiPoly(Rational(-1, 2));
  o.require(seventh == printed, "m = 7 gives " + seventh.str());
  o.note << (o.pass ? "" : " ") << "m = 7: " << seventh.str();
}

// 3. Exact inequalities that numerics alone would not settle.
void negative_controls(Outcome& o) {
  const PiPoly a = evaluate_sum(sinc_pow(4) * sin_n(3) * inv(1));
  const PiPoly a_expected = poly({Rational(-3, 2), Rational(27, 4), Rational(-343, 48), Rational(49, 16),
                                  Rational(-7, 12), Rational(1, 24)});
  o.require(a == a_expected, "(sin n/n)^4 sin(3n)/n = " + a.str());
  o.require(!(a == lin(Rational(-3, 2), Rational(1, 2))), "(sin n/n)^4 sin(3n)/n equals (pi-3)/2");

  const PiPoly b = evaluate_sum(sinc_pow(4) * cos_n(1));
  o.require(b == lin(Rational(-1, 2), Rational(23, 96)), "(sin n/n)^4 cos n = " + b.str());
  o.require(!(b == lin(Rational(-1, 2), Rational(1, 4))), "(sin n/n)^4 cos n equals (pi-2)/4");

  const PiPoly c7 = evaluate_sum(sin_n(1, 7) * inv(1));
  const PiPoly c8 = evaluate_sum(sin_n(1, 8) * inv(2));
  o.require(c7 == lin(0, Rational(9, 64)), "sin^7 n/n = " + c7.str());
  o.require(c8 == poly({0, Rational(6, 64), Rational(1, 64)}), "sin^8 n/n^2 = " + c8.str());
  o.require(!(c7 == c8), "sin^7 n/n equals sin^8 n/n^2");

  for (const char* id : {"sinc-fourth-power-times-sin3n", "sinc-fourth-power-times-cos", "seventh-eighth-power-at-one"}) {
    o.require(find_identity(id).expectation == Expectation::not_equal, std::string(id) + " is not an inequality");
    o.require(verify_identity(id).status == Status::pass, std::string(id) + " not reported as unequal");
  }
  o.note << (o.pass ? "" : " ") << "three inequalities certified exactly";
}

// 4. Exact sine coefficients and Parseval.
void coefficient_engine(Outcome& o) {
  struct Case {
    const char* name;
    PiecewiseFunction f;
    ProductExpression coefficients;
  };
  const std::vector<Case> cases = {
      {"kink", testing::kink(), sin_n(1) * inv(2)},
      {"tent at 1/3", testing::tent(Rational(1, 3)), sin_n(Rational(1, 3)) * inv(2)},
      {"quadratic", testing::quadratic(), sin_n(1, 2) * inv(3)},
      {"cubic", testing::cubic(), sin_n(1, 3) * inv(4)},
      {"sawtooth", testing::sawtooth(), inv(1)},
  };
  for (const auto& c : cases) {
    o.require(canonical_equal(sine_coefficients(c.f), expand_products(c.coefficients)) == FormulaComparison::equal,
              std::string(c.name) + " coefficients differ");
  }
  struct Energy {
    const char* name;
    PiecewiseFunction f;
    PiPoly value;
  };
  const std::vector<Energy> energies = {
      {"kink", testing::kink(), poly({Rational(1, 6), Rational(-1, 3), Rational(1, 6)})},
      {"even kink", testing::even_kink(), poly({Rational(1, 6), Rational(-1, 6), Rational(1, 24)})},
      {"odd kink", testing::odd_kink(), poly({0, Rational(-1, 6), Rational(1, 8)})},
  };
  for (const auto& e : energies) {
    const ParsevalResult r = parseval_check(e.f);
    o.require(r.equal && r.lhs == e.value && r.rhs == e.value, std::string(e.name) + " Parseval: " + r.lhs.str());
  }
  o.note << (o.pass ? "" : " ") << "5 coefficient formulas, 3 Parseval identities";
}

// 5. Identities in x at interior rational points, closed endpoints and exterior points.
void interval_identities(Outcome& o) {
  int points = 0;
  for (const char* name : {"sawtooth-with-sinc-factor", "sinc-powers-sawtooth", "even-sawtooth-with-sinc-factor",
                           "odd-sawtooth-with-sinc-factor", "third-power-plateau", "fourth-power-linear",
                           "fifth-power-plateau", "sixth-power-linear"}) {
    const Identity& id = find_identity(name);
    for (const auto& s : id.sums) {
      const Interval& v = s.validity ? *s.validity : *id.validity;
      int inside = 0;
      for (const Angle& x : interior_points(v, 5)) inside += compare(x, v.lo.at) > 0 && compare(x, v.hi.at) < 0;
      o.require(inside >= 5, std::string(name) + ": " + s.label + " has " + std::to_string(inside) + " interior points");
    }
    o.require(!id.exterior.empty(), std::string(name) + " has no exterior point");
    const VerificationReport r = verify_on_interval(id, 5);
    o.require(r.status == Status::pass, std::string(name) + " failed on its interval");
    for (const auto& [k, v] : r.details)
      if (k == "points checked") points += std::stoi(v);
  }
  // The second sum of the sawtooth identity leaves the line below x = 1.
  const Identity& saw = find_identity("sawtooth-with-sinc-factor");
  const PiPoly at_half = evaluate_series_sum(saw.sums.at(1), Angle(Rational(1, 2)));
  o.require(at_half == lin(Rational(-1, 4), Rational(1, 4)), "second sum at 1/2 = " + at_half.str());
  o.require(!(at_half == lin(Rational(-1, 4), Rational(1, 2))), "second sum at 1/2 equals (pi-1/2)/2");
  o.note << (o.pass ? "" : " ") << points << " exact point checks; second sum at 1/2 = " << at_half.str();
}

// 6. Rigorous partial sum of the squared sinc series at N = 10^6.
void partial_sum_bound(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const PartialSumResult r = partial_sum(expand_products(sinc_pow(2)), 1000000, 30);
  const double elapsed = seconds_since(start);
  const Rational exact = approximate(lin(Rational(-1, 2), Rational(1, 2)), 200);
  const Rational gap = abs(Rational(exact - r.value));
  o.require(gap <= Rational(r.tail_bound), "gap exceeds tail bound");
  o.require(r.tail_bound < 2e-6, "tail bound " + std::to_string(r.tail_bound));
  o.require(elapsed < 30, "took " + std::to_string(elapsed) + " s");
  o.note.precision(4);
  o.note << (o.pass ? "" : " ") << "gap " << gap.get_d() << " <= bound " << r.tail_bound << " in " << elapsed << " s";
}

bool same_pieces(const PiecewiseFunction& a, const PiecewiseFunction& b) {
  if (a.pieces().size() != b.pieces().size()) return false;
  for (std::size_t i = 0; i < a.pieces().size(); ++i) {
    const Piece& p = a.pieces()[i];
    const Piece& q = b.pieces()[i];
    if (!(p.lo == q.lo && p.hi == q.hi && p.poly == q.poly)) return false;
  }
  return true;
}

// 7. The full pipeline recovers the functions behind three coefficient formulas.
void reconstruction(Outcome& o) {
  struct Case {
    const char* name;
    ProductExpression target;
    std::vector<Angle> breakpoints;
    PiecewiseFunction expected;
  };
  const std::vector<Case> cases = {
      {"sin(n)/n^2", sin_n(1) * inv(2), {Angle(1)}, testing::kink()},
      {"sin(n)^2/n^3", sin_n(1, 2) * inv(3), {Angle(2)}, testing::quadratic()},
      {"sin(n)^3/n^4", sin_n(1, 3) * inv(4), {Angle(1), Angle(3)}, testing::cubic()},
  };
  const auto start = std::chrono::steady_clock::now();
  std::vector<PiPoly> constants;
  for (const auto& c : cases) {
    const ReconstructionReport r = reconstruct(expand_products(c.target));
    if (!r.verified()) {
      o.require(false, std::string(c.name) + " not verified: " + r.failure);
      continue;
    }
    o.require(r.roundtrip->formula_equal == FormulaComparison::equal, std::string(c.name) + " coefficients differ");
    o.require(r.hypothesis.breakpoints == c.breakpoints, std::string(c.name) + " breakpoints differ");
    o.require(same_pieces(r.roundtrip->candidate, c.expected), std::string(c.name) + " pieces differ");
    for (const auto& piece : r.roundtrip->candidate.pieces())
      for (const auto& k : piece.poly.coeffs()) constants.push_back(k);
  }
  for (const PiPoly& want :
       {lin(0, Rational(-1, 24)), lin(Rational(-1, 2), Rational(3, 8)), lin(Rational(-1, 2), Rational(9, 16))}) {
    o.require(std::find(constants.begin(), constants.end(), want) != constants.end(), "missing constant " + want.str());
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 120, "took " + std::to_string(elapsed) + " s");
  o.note << (o.pass ? "" : " ") << "3 functions recovered in " << elapsed << " s";
}

// 8. Recognition of the fitted decimals at their printed precision.
void recognition(Outcome& o) {
  struct Case {
    const char* text;
    PiPoly expected;
  };
  const std::vector<Case> cases = {
      {"1.070796", lin(Rational(-1, 2), Rational(1, 2))},
      {"-.392699", lin(0, Rational(-1, 8))},
      {"1.57079623", lin(0, Rational(1, 2))},
      {"-.49999989", PiPoly(Rational(-1, 2))},
      {"-0.13089969390068892", lin(0, Rational(-1, 24))},
      {"0.6780972450893256", lin(Rational(-1, 2), Rational(3, 8))},
      {"0.6780972450961724", lin(Rational(-1, 2), Rational(3, 8))},
      {"1.2671458676442587", lin(Rational(-1, 2), Rational(9, 16))},
  };
  const auto basis = pi_power_basis(1);
  for (const auto& c : cases) {
    const auto r = recognize_constant(parse_rational(c.text), basis, fractional_digits(c.text));
    o.require(r && r->candidate == c.expected, std::string(c.text) + " not recognized");
  }
  const int trials = 20;
  int spurious = 0;
  for (int t = 0; t < trials; ++t) {
    std::string text = "0.";
    for (int d = 0; d < 15; ++d) text += static_cast<char>('0' + testing::uniform(d == 14 ? 1 : 0, 9));
    if (recognize_constant(parse_rational(text), basis, 15)) {
      ++spurious;
      o.require(false, text + " was recognized");
    }
  }
  o.note << (o.pass ? "" : " ") << cases.size() << " constants recognized, " << spurious << "/" << trials
         << " random decimals matched";
}

// 9. Crossings of the power series in x.
void crossings(Outcome& o) {
  const CrossingResult late = find_crossing(sin_x(7) * inv(1), sin_x(8) * inv(2), 0.9, 0.999, 1000000, 9);
  o.require(late.x - late.uncertainty > 0.97 && late.x + late.uncertainty < 0.99,
            "seventh/eighth crossing " + std::to_string(late.x));
  o.require(std::fabs(late.x - 1) > late.uncertainty, "seventh/eighth crossing not separated from 1");
  const CrossingResult one = find_crossing(sin_x(3) * inv(1), sin_x(4) * inv(2), 0.9, 1.1, 10000000, 9);
  o.require(std::fabs(one.x - 1) <= 1e-6 && one.uncertainty <= 1e-6,
            "third/fourth crossing " + std::to_string(one.x) + " +- " + std::to_string(one.uncertainty));
  o.note.precision(8);
  o.note << (o.pass ? "" : " ") << "x* = " << late.x << " +- " << late.uncertainty << "; third/fourth at " << one.x
         << " +- " << one.uncertainty;
}

// 10. Randomized property suites.
void properties(Outcome& o) {
  const auto report = [&](const char* name, const testing::PropertyResult& r) {
    o.require(r.ok(), std::string(name) + " failed on " + r.first_failure);
    return std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) + " " + name;
  };
  const std::string a = report("expansions", testing::check_expansions(50));
  const std::string b = report("brackets", testing::check_brackets(50));
  const std::string c = report("LLL reductions", testing::check_lll(25));
  const std::string d = report("odd extensions", testing::check_odd_extensions(30));
  o.note << (o.pass ? "" : " ") << a << ", " << b << ", " << c << ", " << d;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"exact catalog sweep", exact_sweep},
      {"sinc power table", sinc_powers},
      {"negative controls", negative_controls},
      {"coefficient engine and Parseval", coefficient_engine},
      {"interval identities", interval_identities},
      {"partial sum within tail bound", partial_sum_bound},
      {"reconstruction roundtrips", reconstruction},
      {"recognition robustness", recognition},
      {"crossings", crossings},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.note.str() << " [" << seconds_since(start) << " s]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed;
}
