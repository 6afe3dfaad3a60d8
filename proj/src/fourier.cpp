#include "fourierlab/fourier.hpp"

#include <cmath>

#include "fourierlab/closedform.hpp"
#include "fourierlab/errors.hpp"
#include "fourierlab/mpfloat.hpp"

namespace fourierlab {

namespace {

// One term coef * x^xpow * trig(nx) / n^npow of an antiderivative.
struct PrimitiveTerm {
  Rational coef;
  int xpow;
  TrigKind kind;
  int npow;
};

// Antiderivative of x^j * trig(nx), by
//   int x^j sin = -x^j cos/n + (j/n) int x^(j-1) cos
//   int x^j cos =  x^j sin/n - (j/n) int x^(j-1) sin
std::vector<PrimitiveTerm> monomial_primitive(int j, TrigKind kind) {
  std::vector<PrimitiveTerm> out;
  if (kind == TrigKind::sin) {
    out.push_back({Rational(-1), j, TrigKind::cos, 1});
  } else {
    out.push_back({Rational(1), j, TrigKind::sin, 1});
  }
  if (j == 0) return out;
  TrigKind other = kind == TrigKind::sin ? TrigKind::cos : TrigKind::sin;
  Rational factor = kind == TrigKind::sin ? Rational(j) : Rational(-j);
  for (auto t : monomial_primitive(j - 1, other)) {
    t.coef *= factor;
    t.npow += 1;
    out.push_back(t);
  }
  return out;
}

CoefficientFormula trig_integral(const PiecewiseFunction& f, TrigKind kind) {
  CoefficientFormula out;
  for (const auto& piece : f.pieces()) {
    const PiPoly lo = piece.lo.to_pipoly();
    const PiPoly hi = piece.hi.to_pipoly();
    for (int j = 0; j <= piece.poly.degree(); ++j) {
      const PiPoly a = piece.poly.coeff(j);
      if (a.is_zero()) continue;
      for (const auto& t : monomial_primitive(j, kind)) {
        const PiPoly scale = a * t.coef;
        out.add(scale * hi.pow(static_cast<unsigned>(t.xpow)), t.kind, piece.hi, t.npow);
        out.add(-(scale * lo.pow(static_cast<unsigned>(t.xpow))), t.kind, piece.lo, t.npow);
      }
    }
  }
  return out;
}

}  // namespace

CoefficientFormula sine_integral(const PiecewiseFunction& f) { return trig_integral(f, TrigKind::sin); }

CoefficientFormula cosine_integral(const PiecewiseFunction& f) { return trig_integral(f, TrigKind::cos); }

CoefficientFormula sine_coefficients(const PiecewiseFunction& f) {
  if (f.domain() != DomainKind::half) throw InvalidArgument("sine_coefficients expects a [0, pi] function");
  return (PiPoly(2) * sine_integral(f)).divide_by_pi();
}

FullCoefficients full_coefficients(const PiecewiseFunction& f) {
  if (f.domain() != DomainKind::full) throw InvalidArgument("full_coefficients expects a [-pi, pi] function");
  PiPoly integral;
  for (const auto& piece : f.pieces()) {
    XPolynomial primitive = piece.poly.antiderivative();
    integral += primitive.evaluate(piece.hi) - primitive.evaluate(piece.lo);
  }
  return FullCoefficients{integral.divide_by_pi(), cosine_integral(f).divide_by_pi(),
                          sine_integral(f).divide_by_pi()};
}

NumericValue coefficient_at(const CoefficientFormula& cf, long n, int digits) {
  if (n < 1) throw InvalidArgument("coefficient index must be >= 1");
  const long prec = bits_for_digits(digits, 64) + static_cast<long>(std::log2(static_cast<double>(n))) + 8;
  MpFloat sum(prec), term(prec), arg(prec), magnitude(prec);
  for (const auto& t : cf.terms()) {
    MpFloat c = MpFloat::from(t.c, prec);
    if (t.kind == TrigKind::cos && t.beta.is_zero()) {
      mpfr_set_ui(term.get(), 1, MPFR_RNDN);
    } else {
      MpFloat beta = MpFloat::from(t.beta.to_pipoly(), prec);
      mpfr_mul_si(arg.get(), beta.get(), n, MPFR_RNDN);
      if (t.kind == TrigKind::sin)
        mpfr_sin(term.get(), arg.get(), MPFR_RNDN);
      else
        mpfr_cos(term.get(), arg.get(), MPFR_RNDN);
    }
    mpfr_mul(term.get(), term.get(), c.get(), MPFR_RNDN);
    for (int k = 0; k < t.p; ++k) mpfr_div_si(term.get(), term.get(), n, MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_abs(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(magnitude.get(), magnitude.get(), term.get(), MPFR_RNDU);
  }
  const double rounding = std::ldexp(magnitude.to_double() * static_cast<double>(cf.size() + 1) * 16.0, static_cast<int>(-prec));
  return NumericValue{sum.to_fixed(digits), rounding + 0.5 * std::pow(10.0, -digits)};
}

double coefficient_approx(const CoefficientFormula& cf, long n) {
  return std::stod(coefficient_at(cf, n, 30).text);
}

FormulaComparison canonical_equal(const CoefficientFormula& x, const CoefficientFormula& y) {
  return x == y ? FormulaComparison::equal : FormulaComparison::not_equal_formally;
}

SemanticComparison semantic_compare(const CoefficientFormula& x, const CoefficientFormula& y, double tolerance) {
  if (canonical_equal(x, y) == FormulaComparison::equal) return SemanticComparison::equal;
  const CoefficientFormula diff = x - y;
  for (long n = 1; n <= 8; ++n)
    if (std::abs(coefficient_approx(diff, n)) > tolerance) return SemanticComparison::unequal;
  return SemanticComparison::numerically_equal;
}

ParsevalResult parseval_check(const PiecewiseFunction& f) {
  const PiecewiseFunction full = f.domain() == DomainKind::half ? odd_extension(f) : f;
  const PiPoly lhs = square_integral(full);
  const FullCoefficients fc = full_coefficients(full);
  PiPoly rhs = fc.a0 * fc.a0 * Rational(1, 2);
  rhs += sum_closed_form(fc.a * fc.a + fc.b * fc.b);
  return ParsevalResult{lhs, rhs, lhs == rhs};
}

}  // namespace fourierlab
