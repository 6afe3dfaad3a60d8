#include <doctest.h>

#include "fourierlab/angle.hpp"
#include "fourierlab/errors.hpp"
#include "fourierlab/pipoly.hpp"
#include "support.hpp"

using namespace fourierlab;

TEST_CASE("parse_rational reads fractions and decimals exactly") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
}

TEST_CASE("format_fixed rounds half away from zero") {
  CHECK(format_fixed(Rational(1, 8), 2) == "0.13");
  CHECK(format_fixed(Rational(-1, 8), 2) == "-0.13");
  CHECK(format_fixed(Rational(2, 3), 5) == "0.66667");
}

TEST_CASE("PiPoly arithmetic keeps canonical form") {
  const PiPoly a = PiPoly::linear(Rational(-1), Rational(1));  // pi - 1
  const PiPoly sq = a * a;
  CHECK(sq == PiPoly(std::vector<Rational>{1, -2, 1}));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a.pow(3) == a * a * a);
  CHECK((sq / Rational(6)).coeff(2) == Rational(1, 6));
  CHECK(PiPoly::linear(0, 2).divide_by_pi() == PiPoly(2));
  CHECK_THROWS_AS(a.divide_by_pi(), NotInPiRing);
  CHECK_THROWS_AS(PiPoly::pi().pow(17), DegreeOverflow);
}

TEST_CASE("pi enclosure contains the published digits") {
  const Rational published = parse_rational(testing::kPiDigits);
  for (long bits : {64L, 200L}) {
    const RationalInterval iv = pi_enclosure(bits);
    CHECK(iv.lo < iv.hi);
    // One ulp at this precision: 2^(2 - bits).
    CHECK(iv.hi - iv.lo <= Rational(1, 1) / (Rational(mpz_class(1) << (bits - 2))));
    // The published digits are within 10^-60 of pi.
    CHECK(iv.lo <= published + parse_rational("1e-60"));
    CHECK(iv.hi >= published - parse_rational("1e-60"));
  }
}

TEST_CASE("exact_sign decides tiny but nonzero values") {
  // 355/113 overestimates pi by about 2.7e-7.
  CHECK(exact_sign(PiPoly::linear(Rational(-355, 113), 1)) == Sign::negative);
  CHECK(exact_sign(PiPoly::linear(Rational(-3), 1)) == Sign::positive);
  CHECK(exact_sign(PiPoly()) == Sign::zero);
  // 22/7 - pi squared minus its expansion is exactly zero.
  const PiPoly d = PiPoly::linear(Rational(22, 7), -1);
  CHECK(exact_sign(d * d - (PiPoly(Rational(484, 49)) - PiPoly::linear(0, Rational(44, 7)) +
                            PiPoly(std::vector<Rational>{0, 0, 1}))) == Sign::zero);
  CHECK(compare(PiPoly::pi(), PiPoly(Rational(314159, 100000))) == 1);
}

TEST_CASE("to_decimal is correctly rounded against the published digits") {
  const Rational published = parse_rational(testing::kPiDigits);
  for (int digits = 1; digits <= 55; ++digits) {
    CHECK(to_decimal(PiPoly::pi(), digits).text == format_fixed(published, digits));
  }
  CHECK(to_decimal(PiPoly::pi(), 20).text == "3.14159265358979323846");
  CHECK(to_decimal(PiPoly::pi(), 5).text == "3.14159");
  // 3pi/8 - 1/2 = 0.678097245096172464...: rounding to 16 places gives ...1725.
  const PiPoly b = PiPoly::linear(Rational(-1, 2), Rational(3, 8));
  const DecimalApprox d = to_decimal(b, 16);
  CHECK(d.text == "0.6780972450961725");
  CHECK(d.error_bound < Rational(1, 2) * parse_rational("1e-16"));
  // The truncated value printed as 0.6780972450961724 is within one unit of the last place.
  CHECK(abs(Rational(parse_rational("0.6780972450961724") - parse_rational(d.text))) <= parse_rational("1e-16"));
  CHECK(to_decimal(PiPoly(Rational(-1, 3)), 4).text == "-0.3333");
}

TEST_CASE("to_decimal agrees with a long double oracle") {
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> c;
    for (int k = 0; k < 4; ++k) c.emplace_back(testing::uniform(-50, 50), testing::uniform(1, 40));
    const PiPoly p(c);
    const double oracle = static_cast<double>(testing::eval_pipoly(p));
    CHECK(std::fabs(std::stod(to_decimal(p, 12).text) - oracle) < 1e-9 * (1 + std::fabs(oracle)));
  }
}

TEST_CASE("approximate is within 2^-bits") {
  const PiPoly p = PiPoly(std::vector<Rational>{Rational(1, 3), Rational(-2, 7), Rational(5, 11)});
  const Rational a = approximate(p, 100);
  const Rational b = approximate(p, 300);
  CHECK(abs(Rational(a - b)) < Rational(1) / Rational(mpz_class(1) << 99));
}

TEST_CASE("Angle arithmetic and reduction modulo 2pi") {
  const Angle a(Rational(1), Rational(1, 3));
  CHECK((a + a) == Angle(Rational(2), Rational(2, 3)));
  CHECK(compare(Angle::pi_times(1), Angle(3)) == 1);
  const ReducedAngle r = reduce_mod_2pi(Angle(Rational(7), Rational(5)));
  // 7 + 5pi = (7 - 2pi) + 2pi*3, with 7 - 2pi in [0, 2pi)
  CHECK(r.reduced == Angle(Rational(7), Rational(-1)));
  CHECK(r.turns == 3);
  CHECK_FALSE(r.boundary);
  CHECK(reduce_mod_2pi(Angle::pi_times(4)).boundary);
}
