#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fourierlab/closedform.hpp"
#include "fourierlab/piecewise.hpp"

namespace fourierlab {

struct IntervalBound {
  Angle at;
  bool closed = true;
};

/// Interval of x values with exact endpoints.
struct Interval {
  IntervalBound lo;
  IntervalBound hi;

  bool contains(const Angle& x) const;
  std::string str() const;
};

/// One side of an identity: a series over n >= 1, possibly restricted to even
/// or odd n or given alternating signs, and possibly depending on x.
struct SeriesSum {
  std::string label;
  ProductExpression expr;
  IndexMode mode = IndexMode::all;
  std::optional<Interval> validity;  // where this sum alone equals the right side
  std::optional<PiPoly> known;       // exact value claimed for an x-free sum
  /// When set, the quantity compared is scale * (sum)^2.
  std::optional<Rational> squared_scale;
};

/// A point outside the validity interval where one sum must leave the right side.
struct ExteriorCheck {
  Angle x;
  std::size_t sum = 0;
  std::optional<PiPoly> expected;
};

enum class Expectation { equal, not_equal, report };
enum class VerificationMode { exact, numeric_only };
const char* to_string(Expectation e);
const char* to_string(VerificationMode m);

struct Identity {
  std::string id;
  std::string description;
  std::vector<SeriesSum> sums;
  std::optional<XPolynomial> rhs;  // a constant polynomial for x-free identities
  std::optional<Interval> validity;
  Expectation expectation = Expectation::equal;
  VerificationMode mode = VerificationMode::exact;
  std::vector<ExteriorCheck> exterior;
  /// Sine-series claims: `function` on [0, pi] has sine coefficients `coefficients`.
  std::optional<PiecewiseFunction> function;
  CoefficientFormula coefficients;

  bool has_x() const;
  bool is_sine_series() const { return function.has_value(); }
};

enum class Status { pass, fail, error };
const char* to_string(Status s);

struct VerificationReport {
  std::string id;
  Status status = Status::error;
  std::vector<std::pair<std::string, std::string>> details;
  double runtime_seconds = 0;
};

/// The built-in registry, in a fixed order.
const std::vector<Identity>& list_identities();
/// Throws UnknownIdentity.
const Identity& find_identity(const std::string& id);

enum class CheckMode { exact, numeric };

/// Exact mode evaluates every sum in closed form and compares with zero
/// tolerance; identities in x are checked on their validity intervals.
/// Numeric mode uses partial sums of N terms and accepts agreement within the
/// tail bound plus 10^-digits. numeric_only identities always run numerically.
VerificationReport verify_identity(const std::string& id, CheckMode mode = CheckMode::exact, int digits = 30,
                                   long N = 1000000);
VerificationReport verify_identity(const Identity& identity, CheckMode mode = CheckMode::exact, int digits = 30,
                                   long N = 1000000);

/// Exact checks at `samples` rational points and `samples` fractions of the
/// interval strictly inside each sum's validity interval, at closed endpoints,
/// and at the exterior counter-points.
VerificationReport verify_on_interval(const std::string& id, int samples = 5);
VerificationReport verify_on_interval(const Identity& identity, int samples = 5);

/// Points used by verify_on_interval for one interval.
std::vector<Angle> interior_points(const Interval& interval, int samples);

/// Exact value of a sum at x (x ignored for x-free sums).
PiPoly evaluate_series_sum(const SeriesSum& sum, const Angle& x = Angle());

}  // namespace fourierlab
