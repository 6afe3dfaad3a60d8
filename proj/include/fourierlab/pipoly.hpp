#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fourierlab/rational.hpp"

namespace fourierlab {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// Rigorous rational enclosure of pi obtained from MPFR with directed rounding;
/// the width is one ulp, 2^(2 - bits).
RationalInterval pi_enclosure(long bits);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// A polynomial in pi with rational coefficients, kept in canonical form
/// (trailing zero coefficients trimmed). Index k holds the coefficient of pi^k.
class PiPoly {
 public:
  static constexpr int kMaxDegree = 16;

  PiPoly() = default;
  PiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PiPoly(long constant);             // NOLINT(google-explicit-constructor)
  explicit PiPoly(std::vector<Rational> coeffs);

  static PiPoly pi();
  /// a + b*pi
  static PiPoly linear(const Rational& a, const Rational& b);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  PiPoly operator-() const;
  PiPoly& operator+=(const PiPoly& other);
  PiPoly& operator-=(const PiPoly& other);
  PiPoly& operator*=(const PiPoly& other);
  PiPoly& operator*=(const Rational& scalar);

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(PiPoly a, const PiPoly& b) { return a *= b; }
  friend PiPoly operator*(PiPoly a, const Rational& s) { return a *= s; }
  friend PiPoly operator*(const Rational& s, PiPoly a) { return a *= s; }
  friend PiPoly operator/(PiPoly a, const Rational& s) { return a *= Rational(1) / s; }
  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.coeffs_ == b.coeffs_; }

  PiPoly pow(unsigned exponent) const;

  /// Exact division by pi; throws NotInPiRing when the constant term is nonzero.
  PiPoly divide_by_pi() const;

  /// Interval containing the real value, given an enclosure of pi with lo > 0.
  RationalInterval enclose(const RationalInterval& pi) const;

  /// Nearest double (for diagnostics and fast numerics only).
  double approx() const;

  /// Human-readable form such as "-1/2 + 23/96*pi".
  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PiPoly& p);

/// Sign of p(pi). Zero only for the zero polynomial, since pi is transcendental.
/// Nonzero signs are decided by interval evaluation with pi enclosures
/// starting at 64 bits and doubling until the enclosure excludes zero.
Sign exact_sign(const PiPoly& p);

/// -1, 0, +1 for a < b, a == b, a > b as real numbers.
int compare(const PiPoly& a, const PiPoly& b);

struct DecimalApprox {
  std::string text;      // fixed-point decimal with `digits` fractional digits
  Rational error_bound;  // |text - exact value|, strictly below half an ulp
};

/// Correctly rounded decimal expansion of p(pi).
DecimalApprox to_decimal(const PiPoly& p, int digits);

/// Rational approximation of p(pi) with absolute error below 2^-bits.
Rational approximate(const PiPoly& p, long bits);

}  // namespace fourierlab
