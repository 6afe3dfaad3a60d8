#include <doctest.h>

#include "fourierlab/closedform.hpp"
#include "fourierlab/errors.hpp"
#include "fourierlab/fourier.hpp"
#include "fourierlab/numeric.hpp"
#include "properties.hpp"

using namespace fourierlab;

namespace {

ProductExpression sin_n(const Angle& b, int power = 1) { return trig_factor(TrigKind::sin, AngleExpr{b, 0}, power); }
ProductExpression cos_n(const Angle& b, int power = 1) { return trig_factor(TrigKind::cos, AngleExpr{b, 0}, power); }
ProductExpression inv(int p) { return inverse_n_power(p); }
PiPoly poly(std::vector<Rational> c) { return PiPoly(std::move(c)); }

}  // namespace

TEST_CASE("Bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  CHECK(bernoulli_number(7) == 0);
  const BernoulliPoly b3 = bernoulli_polynomial(3);  // x^3 - 3x^2/2 + x/2
  CHECK(b3(Rational(1, 2)) == 0);
  CHECK(b3(Rational(1, 3)) == Rational(1, 27) - Rational(1, 6) + Rational(1, 6));
}

TEST_CASE("classical sums") {
  CHECK(evaluate_sum(inv(2)) == poly({0, 0, Rational(1, 6)}));
  CHECK(evaluate_sum(inv(4)) == poly({0, 0, 0, 0, Rational(1, 90)}));
  CHECK(evaluate_sum(sin_n(1) * inv(1)) == PiPoly::linear(Rational(-1, 2), Rational(1, 2)));
  CHECK(evaluate_sum(sin_n(1, 2) * inv(2)) == PiPoly::linear(Rational(-1, 2), Rational(1, 2)));
  CHECK(evaluate_sum(sin_n(1) * inv(3)) == poly({Rational(1, 12), Rational(-1, 4), Rational(1, 6)}));
  // Gregory: sum sin(n pi/2)/n = pi/4
  CHECK(evaluate_sum(sin_n(Angle::pi_times(Rational(1, 2))) * inv(1)) == PiPoly::linear(0, Rational(1, 4)));
  // sum cos(n pi)/n^2 = -pi^2/12
  CHECK(evaluate_sum(cos_n(Angle::pi_times(1)) * inv(2)) == poly({0, 0, Rational(-1, 12)}));
}

TEST_CASE("sinc powers") {
  CHECK(evaluate_sum((sin_n(1) * inv(1)).pow(3)) == PiPoly::linear(Rational(-1, 2), Rational(3, 8)));
  CHECK(evaluate_sum((sin_n(1) * inv(1)).pow(6)) == PiPoly::linear(Rational(-1, 2), Rational(11, 40)));
  const PiPoly seventh = evaluate_sum((sin_n(1) * inv(1)).pow(7));
  const PiPoly printed =
      poly({0, 129423, -201684, 144060, -54880, 11760, -1344, 64}) / Rational(46080) + PiPoly(Rational(-1, 2));
  CHECK(seventh == printed);
}

TEST_CASE("sums that leave the ring are rejected") {
  CHECK_THROWS_AS(evaluate_sum(cos_n(1) * inv(1)), NotClosedForm);
  CHECK_THROWS_AS(evaluate_sum(sin_n(1) * inv(2)), NotClosedForm);
  CHECK_THROWS_AS(evaluate_sum(inv(3)), NotClosedForm);
  CHECK_THROWS_AS(expand_products(sin_n(1, 17)), DegreeOverflow);
  CHECK_THROWS_AS(expand_products(trig_factor(TrigKind::sin, AngleExpr{Angle(), 1})), InvalidArgument);
}

TEST_CASE("index transforms") {
  const SeriesExpression sinc = expand_products(sin_n(1) * inv(1));
  const PiPoly even = sum_closed_form(index_transform(sinc, IndexMode::even_part));
  const PiPoly odd = sum_closed_form(index_transform(sinc, IndexMode::odd_part));
  CHECK(even == PiPoly::linear(Rational(-1, 2), Rational(1, 4)));
  CHECK(odd == PiPoly::linear(0, Rational(1, 4)));
  CHECK(even + odd == sum_closed_form(sinc));
  CHECK(sum_closed_form(index_transform(sinc, IndexMode::alternate_sign)) == PiPoly(Rational(1, 2)));
  // The even part is reindexed by n = 2m.
  const SeriesExpression ev = index_transform(sinc, IndexMode::even_part);
  CHECK(coefficient_approx(ev, 3) == doctest::Approx(std::sin(6.0) / 6));
  CHECK(coefficient_approx(ev, 4) == doctest::Approx(std::sin(8.0) / 8));
}

TEST_CASE("product expansion agrees with direct evaluation on 50 random products") {
  for (int trial = 0; trial < 50; ++trial) {
    const ProductExpression e = testing::random_product();
    const SeriesExpression s = expand_products(e);
    CAPTURE(e.str());
    for (long n = 1; n <= 25; ++n) {
      const long double direct = testing::product_term(e, n);
      CHECK(std::fabs(coefficient_approx(s, n) - static_cast<double>(direct)) < 1e-12);
    }
  }
}

TEST_CASE("closed forms lie inside partial-sum brackets on 50 random admissible series") {
  for (int trial = 0; trial < 50; ++trial) {
    const SeriesExpression e = testing::random_admissible();
    if (e.empty()) continue;
    CAPTURE(e.str());
    const PiPoly exact = sum_closed_form(e);
    const long N = 20000;
    const PartialSumResult partial = partial_sum(e, N, 25);
    const Rational exact_value = approximate(exact, 120);
    const Rational gap = abs(Rational(exact_value - partial.value));
    CHECK(gap <= Rational(partial.tail_bound));
    // An independent long double sum of the same terms agrees with the exact value too.
    long double direct = 0;
    for (const auto& t : e.terms()) {
      const long double c = testing::eval_pipoly(t.c), beta = testing::eval_angle(t.beta);
      for (long n = 1; n <= N; ++n) {
        const long double trig = t.kind == TrigKind::sin ? std::sin(beta * n) : std::cos(beta * n);
        direct += c * trig / std::pow(static_cast<long double>(n), t.p);
      }
    }
    CHECK(std::fabs(static_cast<double>(direct) - exact.approx()) <= partial.tail_bound + 1e-9);
  }
}
