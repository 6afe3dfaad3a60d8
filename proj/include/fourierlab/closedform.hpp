#pragma once

#include <string>
#include <vector>

#include "fourierlab/angle.hpp"
#include "fourierlab/pipoly.hpp"
#include "fourierlab/trig_series.hpp"

namespace fourierlab {

/// A frequency base + x_coef * x, where x is an optional symbolic variable.
struct AngleExpr {
  Angle base;
  Rational x_coef;

  bool has_x() const { return x_coef != 0; }
  Angle at(const Angle& x) const { return base + x_coef * x; }
  friend bool operator==(const AngleExpr& a, const AngleExpr& b) {
    return a.base == b.base && a.x_coef == b.x_coef;
  }
  std::string str() const;
};

struct TrigFactor {
  TrigKind kind;
  AngleExpr arg;  // the factor is trig(arg * n)
  int power = 1;
};

/// c * prod(factors) / n^p
struct ProductTerm {
  PiPoly c;
  std::vector<TrigFactor> factors;
  int p = 0;

  int trig_degree() const;
  std::string str() const;
};

/// Sum over n >= 1 of a finite sum of ProductTerms.
struct ProductExpression {
  std::vector<ProductTerm> terms;

  static constexpr int kMaxTrigDegree = 16;

  bool has_x() const;
  ProductExpression substitute(const Angle& x) const;
  std::string str() const;

  ProductExpression& operator+=(const ProductExpression& o);
  friend ProductExpression operator+(ProductExpression a, const ProductExpression& b) { return a += b; }
  friend ProductExpression operator*(const ProductExpression& a, const ProductExpression& b);
  friend ProductExpression operator*(const PiPoly& s, const ProductExpression& a);
  ProductExpression pow(unsigned exponent) const;
};

/// The linear series language: a CoefficientFormula read as sum over n >= 1.
using SeriesExpression = CoefficientFormula;

/// Shorthand builders.
ProductExpression trig_factor(TrigKind kind, const AngleExpr& arg, int power = 1);
ProductExpression scalar(const PiPoly& c);
/// 1 / n^p
ProductExpression inverse_n_power(int p);

/// Linearizes every product of trig factors by product-to-sum identities.
SeriesExpression expand_products(const ProductExpression& e);

struct BernoulliPoly {
  int k;
  std::vector<Rational> coeffs;  // ascending powers of x
  Rational operator()(const Rational& x) const;
};

Rational bernoulli_number(int k);  // B_1 = -1/2 convention
BernoulliPoly bernoulli_polynomial(int k);

/// Exact value in Q[pi] of a single admissible term summed over n >= 1.
PiPoly sum_term(const TrigTerm& t);

/// Exact value of the series. Admissible terms are sin with odd p >= 1 and
/// cos (including constants) with even p >= 2; anything else throws
/// NotClosedForm.
PiPoly sum_closed_form(const SeriesExpression& e);

PiPoly evaluate_sum(const ProductExpression& e);

enum class IndexMode { all, even_part, odd_part, alternate_sign };

const char* to_string(IndexMode mode);

/// Restricts a series to even or odd n, or inserts the factor (-1)^(n+1).
/// Only the sum is preserved: even_part is reindexed by n = 2m, and odd_part
/// is the difference of the series and its even part.
SeriesExpression index_transform(const SeriesExpression& e, IndexMode mode);

}  // namespace fourierlab
