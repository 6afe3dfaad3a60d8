#include <doctest.h>

#include "fourierlab/errors.hpp"
#include "fourierlab/piecewise.hpp"
#include "functions.hpp"
#include "properties.hpp"

using namespace fourierlab;
using testing::kPi;
using testing::lin;
using testing::xp;

TEST_CASE("XPolynomial arithmetic") {
  const XPolynomial p = xp({1, 2, 3});  // 1 + 2x + 3x^2
  CHECK(p.evaluate(Angle(2)) == PiPoly(17));
  CHECK(p.derivative() == xp({2, 6}));
  CHECK(p.antiderivative().derivative() == p);
  CHECK((p * p).degree() == 4);
  // reflect: p(-x)
  CHECK(p.reflect() == xp({1, -2, 3}));
  CHECK(p.evaluate(Angle::pi_times(1)) == PiPoly(std::vector<Rational>{1, 2, 3}));
}

TEST_CASE("construction validates coverage and parity") {
  CHECK_THROWS_AS(PiecewiseFunction({{0, 1, xp({1})}, {2, kPi, xp({1})}}, DomainKind::half), InvalidArgument);
  CHECK_THROWS_AS(PiecewiseFunction({{0, 1, xp({1})}}, DomainKind::half), InvalidArgument);
  CHECK_THROWS_AS(PiecewiseFunction({{-kPi, kPi, xp({1})}}, DomainKind::full, Parity::odd), InvalidArgument);
  CHECK_NOTHROW(PiecewiseFunction({{-kPi, kPi, xp({0, 1})}}, DomainKind::full, Parity::odd));
  CHECK_NOTHROW(PiecewiseFunction({{-kPi, kPi, xp({1, 0, 1})}}, DomainKind::full, Parity::even));
}

TEST_CASE("evaluate averages one-sided values at breakpoints") {
  const PiecewiseFunction step = testing::half({{0, 1, xp({1})}, {1, kPi, xp({0})}});
  CHECK(evaluate(step, Angle(Rational(1, 2))) == PiPoly(1));
  CHECK(evaluate(step, Angle(1)) == PiPoly(Rational(1, 2)));
  CHECK(evaluate(step, Angle(2)) == PiPoly(0));
  CHECK_THROWS_AS(evaluate(step, Angle(4)), OutOfDomain);
  // The kink function is continuous at 1.
  CHECK(evaluate(testing::kink(), Angle(1)) == lin(Rational(-1, 2), Rational(1, 2)));
}

TEST_CASE("odd extension is odd and agrees with the original on [0, pi]") {
  for (int trial = 0; trial < 30; ++trial) {
    const PiecewiseFunction f = testing::random_function();
    const PiecewiseFunction g = odd_extension(f);
    CHECK(g.domain() == DomainKind::full);
    CHECK(g.parity() == Parity::odd);
    for (int k = 0; k < 5; ++k) {
      const Angle x = testing::random_point();
      CHECK(evaluate(g, -x) == -evaluate(g, x));
      CHECK(evaluate(g, x) == evaluate(f, x));
    }
    // Each piece on the left mirrors a piece on the right.
    const auto& pieces = g.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Piece& left = pieces[i];
      const Piece& right = pieces[pieces.size() - 1 - i];
      CHECK(left.lo == -right.hi);
      CHECK(left.poly == -right.poly.reflect());
    }
  }
}

TEST_CASE("square integral matches quadrature") {
  // Breakpoints at multiples of pi keep the integral in pi * Q[pi].
  for (int trial = 0; trial < 20; ++trial) {
    const PiecewiseFunction f = testing::random_function(true);
    long double oracle = 0;
    for (const auto& p : f.pieces()) {
      oracle += testing::integrate(
          [&](long double x) {
            const long double v = p.poly.evaluate_approx(static_cast<double>(x));
            return v * v;
          },
          testing::eval_angle(p.lo), testing::eval_angle(p.hi), 8);
    }
    oracle *= 2 / testing::pi_ld();
    const double exact = square_integral(f).approx();
    CHECK(std::fabs(exact - static_cast<double>(oracle)) < 1e-9 * (1 + std::fabs(exact)));
  }
}

TEST_CASE("square integral outside pi * Q[pi] is rejected") {
  const PiecewiseFunction step = testing::half({{0, 1, xp({1})}, {1, kPi, xp({0})}});
  CHECK_THROWS_AS(square_integral(step), NotInPiRing);
}

TEST_CASE("sum of functions refines breakpoints") {
  const PiecewiseFunction s = testing::kink() + testing::sawtooth();
  CHECK(s.pieces().size() == 2);
  CHECK(evaluate(s, Angle(2)) == PiPoly(std::vector<Rational>{-2, 1}));
}
