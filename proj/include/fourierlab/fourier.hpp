#pragma once

#include <string>
#include <vector>

#include "fourierlab/piecewise.hpp"
#include "fourierlab/trig_series.hpp"

namespace fourierlab {

/// Formula for the integral of f(x) sin(nx) over f's domain (no 2/pi factor).
/// Always representable in Q[pi], unlike the coefficients themselves.
CoefficientFormula sine_integral(const PiecewiseFunction& f);
/// Formula for the integral of f(x) cos(nx) over f's domain.
CoefficientFormula cosine_integral(const PiecewiseFunction& f);

/// b_n = (2/pi) * integral_0^pi f(x) sin(nx) dx for a [0, pi] function.
CoefficientFormula sine_coefficients(const PiecewiseFunction& f);

struct FullCoefficients {
  PiPoly a0;
  CoefficientFormula a;  // cos(nx) coefficients, n >= 1
  CoefficientFormula b;  // sin(nx) coefficients, n >= 1
};

/// Coefficients over [-pi, pi]. Parity is not assumed: for an odd function
/// the cosine side comes out empty because the integrals cancel exactly.
FullCoefficients full_coefficients(const PiecewiseFunction& f);

struct NumericValue {
  std::string text;    // fixed-point decimal
  double error_bound;  // bound on |text - exact|
};

/// Value of the formula at index n, to `digits` fractional digits.
NumericValue coefficient_at(const CoefficientFormula& cf, long n, int digits);
/// Double-precision value at index n (computed at 128 bits, then rounded).
double coefficient_approx(const CoefficientFormula& cf, long n);

enum class FormulaComparison { equal, not_equal_formally };

/// Structural comparison of canonical forms. `equal` is sound; formal
/// inequality may still hide pointwise equality over the integers.
FormulaComparison canonical_equal(const CoefficientFormula& x, const CoefficientFormula& y);

enum class SemanticComparison { equal, numerically_equal, unequal };

/// canonical_equal, downgraded to `unequal` only when a spot check at
/// n = 1..8 disagrees beyond `tolerance`.
SemanticComparison semantic_compare(const CoefficientFormula& x, const CoefficientFormula& y,
                                    double tolerance = 1e-12);

struct ParsevalResult {
  PiPoly lhs;  // (1/pi) * integral of f^2
  PiPoly rhs;  // a0^2/2 + sum(a_n^2 + b_n^2), summed in closed form
  bool equal;
};

ParsevalResult parseval_check(const PiecewiseFunction& f);

}  // namespace fourierlab
