#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fourierlab/closedform.hpp"
#include "fourierlab/rational.hpp"

namespace fourierlab {

struct PartialSumResult {
  Rational value;     // exact binary value of the computed partial sum
  long N = 0;         // number of terms summed
  double tail_bound;  // rigorous bound on |value - infinite sum|, rounding included
  int digits = 0;     // requested decimal digits

  std::string text() const;
};

/// Sum of the first N terms in MPFR at (digits + 10 + log10 N) decimal digits.
/// Terms are added per fixed-size block and the block sums are combined by a
/// fixed pairwise tree, so the result does not depend on scheduling.
PartialSumResult partial_sum(const SeriesExpression& e, long N, int digits);

/// Rigorous bound on |sum_{n > N} term| for every term of e, without rounding.
double tail_bound(const SeriesExpression& e, long N);

struct FastSum {
  long double value;
  double error_bound;  // truncation tail plus a floating-point rounding estimate
};

/// Extended-precision partial sum used for sampling and root finding.
FastSum fast_partial_sum(const SeriesExpression& e, long N);

struct Grid {
  double lo;
  double hi;
  int count;
  bool midpoints = true;  // sample cell midpoints instead of the endpoints
};

std::vector<double> grid_points(const Grid& grid);

struct SampleSet {
  std::vector<double> x;  // strictly increasing
  std::vector<double> y;
  long N = 0;
  std::string source;
  double error_bound = 0;  // max over samples of the per-sample error bound

  std::size_t size() const { return x.size(); }
  std::string to_csv() const;
  std::string to_json() const;
};

/// The series to sum at a given x.
using SeriesAt = std::function<SeriesExpression(const Angle& x)>;

SeriesAt series_in_x(const ProductExpression& e);
/// x -> sum cf(n) sin(n x)
SeriesAt sine_series(const SeriesExpression& cf);

SampleSet sample_series(const SeriesAt& series, const Grid& grid, long N, std::string source = "");
SampleSet sample_series(const ProductExpression& e, const Grid& grid, long N);

struct CrossingResult {
  double x;            // bisection midpoint
  double uncertainty;  // bracket half-width plus truncation error over slope
  double slope;        // estimated d/dx of the difference at x
  int iterations;
};

/// Bisection on the difference of partial sums of e1 and e2 over [lo, hi].
/// Throws NoSignChange when the difference has the same sign at both ends.
CrossingResult find_crossing(const ProductExpression& e1, const ProductExpression& e2, double lo, double hi,
                             long N, int digits);

}  // namespace fourierlab
