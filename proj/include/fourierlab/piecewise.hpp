#pragma once

#include <span>
#include <string>
#include <vector>

#include "fourierlab/angle.hpp"
#include "fourierlab/pipoly.hpp"

namespace fourierlab {

/// Polynomial in x whose coefficients are pi-polynomials; index j holds x^j.
class XPolynomial {
 public:
  static constexpr int kMaxDegree = 12;

  XPolynomial() = default;
  explicit XPolynomial(std::vector<PiPoly> coeffs);
  /// The identity polynomial x.
  static XPolynomial x();
  static XPolynomial constant(const PiPoly& c) { return XPolynomial({c}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const PiPoly> coeffs() const { return coeffs_; }
  PiPoly coeff(int j) const;

  XPolynomial operator-() const;
  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial& operator-=(const XPolynomial& o);
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
  friend XPolynomial operator*(const PiPoly& s, const XPolynomial& a);
  friend bool operator==(const XPolynomial& a, const XPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  PiPoly evaluate(const PiPoly& x) const;
  PiPoly evaluate(const Angle& x) const { return evaluate(x.to_pipoly()); }
  double evaluate_approx(double x) const;

  XPolynomial derivative() const;
  /// Antiderivative with zero constant term; may reach degree kMaxDegree + 1.
  XPolynomial antiderivative() const;
  /// p(-x)
  XPolynomial reflect() const;

  std::string str() const;

 private:
  void normalize(int max_degree = kMaxDegree);
  std::vector<PiPoly> coeffs_;
};

struct Piece {
  Angle lo;
  Angle hi;
  XPolynomial poly;
};

enum class DomainKind { half, full };  // [0, pi] or [-pi, pi]
enum class Parity { odd, even, none };

/// Ordered polynomial pieces covering [0, pi] or [-pi, pi] exactly.
class PiecewiseFunction {
 public:
  /// Validates contiguity, coverage and (for full domains) the declared parity.
  PiecewiseFunction(std::vector<Piece> pieces, DomainKind domain, Parity parity = Parity::none);

  static PiecewiseFunction zero(DomainKind domain);

  const std::vector<Piece>& pieces() const { return pieces_; }
  DomainKind domain() const { return domain_; }
  Parity parity() const { return parity_; }
  Angle domain_lo() const;
  Angle domain_hi() const;

  /// Adds pointwise over the common refinement of breakpoints.
  friend PiecewiseFunction operator+(const PiecewiseFunction& a, const PiecewiseFunction& b);

  double evaluate_approx(double x) const;

 private:
  std::vector<Piece> pieces_;
  DomainKind domain_;
  Parity parity_;
};

/// Value at x; interior breakpoints give the average of the one-sided values.
PiPoly evaluate(const PiecewiseFunction& f, const Angle& x);

/// Mirrors a [0, pi] function to an odd function on [-pi, pi], merging
/// adjacent pieces with identical polynomials.
PiecewiseFunction odd_extension(const PiecewiseFunction& f);

/// (1/pi) * integral over [-pi, pi] of f^2; half-domain input uses its odd
/// extension. Throws NotInPiRing when the integral is not in pi * Q[pi].
PiPoly square_integral(const PiecewiseFunction& f);

XPolynomial derivative(const XPolynomial& p);

}  // namespace fourierlab
