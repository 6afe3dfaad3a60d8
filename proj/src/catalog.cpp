#include "fourierlab/catalog.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "fourierlab/errors.hpp"
#include "fourierlab/fourier.hpp"
#include "fourierlab/mpfloat.hpp"
#include "fourierlab/numeric.hpp"

namespace fourierlab {
namespace {

using PE = ProductExpression;

PiPoly lin(const Rational& a, const Rational& b) { return PiPoly::linear(a, b); }
PiPoly poly(std::initializer_list<Rational> coeffs) { return PiPoly(std::vector<Rational>(coeffs)); }
const PiPoly kPi = PiPoly::pi();

Angle pi_times(const Rational& s) { return Angle::pi_times(s); }

PE sin_n(const Angle& b, int power = 1) { return trig_factor(TrigKind::sin, AngleExpr{b, 0}, power); }
PE cos_n(const Angle& b, int power = 1) { return trig_factor(TrigKind::cos, AngleExpr{b, 0}, power); }
PE sin_x(const Rational& k, int power = 1) { return trig_factor(TrigKind::sin, AngleExpr{Angle(), k}, power); }
PE cos_x(const Rational& k, int power = 1) { return trig_factor(TrigKind::cos, AngleExpr{Angle(), k}, power); }
PE inv(int p) { return inverse_n_power(p); }
PE sinc() { return sin_n(1) * inv(1); }
PE sinc_pow(int k) { return k == 0 ? scalar(PiPoly(1)) : sinc().pow(static_cast<unsigned>(k)); }
PE scaled(const PiPoly& c, const PE& e) { return c * e; }

XPolynomial xpoly(std::initializer_list<PiPoly> coeffs) { return XPolynomial(std::vector<PiPoly>(coeffs)); }
XPolynomial constant(const PiPoly& c) { return XPolynomial::constant(c); }

Interval closed(const Angle& a, const Angle& b) { return {{a, true}, {b, true}}; }
Interval open(const Angle& a, const Angle& b) { return {{a, false}, {b, false}}; }
Interval half_open(const Angle& a, const Angle& b) { return {{a, false}, {b, true}}; }

SeriesSum sum(std::string label, PE expr, IndexMode mode = IndexMode::all) {
  SeriesSum s;
  s.label = std::move(label);
  s.expr = std::move(expr);
  s.mode = mode;
  return s;
}

SeriesSum with_validity(SeriesSum s, Interval v) {
  s.validity = std::move(v);
  return s;
}

SeriesSum with_known(SeriesSum s, PiPoly v) {
  s.known = std::move(v);
  return s;
}

Identity constant_identity(std::string id, std::string description, std::vector<SeriesSum> sums, const PiPoly& rhs) {
  Identity out;
  out.id = std::move(id);
  out.description = std::move(description);
  out.sums = std::move(sums);
  out.rhs = constant(rhs);
  return out;
}

Identity interval_identity(std::string id, std::string description, std::vector<SeriesSum> sums, XPolynomial rhs,
                           Interval validity, std::vector<ExteriorCheck> exterior = {}) {
  Identity out;
  out.id = std::move(id);
  out.description = std::move(description);
  out.sums = std::move(sums);
  out.rhs = std::move(rhs);
  out.validity = std::move(validity);
  out.exterior = std::move(exterior);
  return out;
}

Identity sine_series_identity(std::string id, std::string description, std::vector<Piece> pieces,
                              const PE& coefficients) {
  Identity out;
  out.id = std::move(id);
  out.description = std::move(description);
  out.function = PiecewiseFunction(std::move(pieces), DomainKind::half);
  out.coefficients = expand_products(coefficients);
  return out;
}

Identity negative(Identity in) {
  in.expectation = Expectation::not_equal;
  return in;
}

// Pieces of the sin^2(n)/n^3 and sin^3(n)/n^4 functions.
XPolynomial quadratic_left() { return xpoly({0, lin(Rational(-1, 2), Rational(1, 2)), lin(0, Rational(-1, 8))}); }
XPolynomial sawtooth_line() { return xpoly({lin(0, Rational(1, 2)), Rational(-1, 2)}); }
XPolynomial cubic_left() {
  return xpoly({0, lin(Rational(-1, 2), Rational(3, 8)), 0, lin(0, Rational(-1, 24))});
}
XPolynomial cubic_middle() {
  return xpoly({lin(0, Rational(-1, 16)), lin(Rational(-1, 2), Rational(9, 16)), lin(0, Rational(-3, 16)),
                lin(0, Rational(1, 48))});
}

std::vector<Identity> build_registry() {
  std::vector<Identity> r;
  const Angle pi = pi_times(1);
  const Angle two_pi = pi_times(2);

  // Sums at a single point.
  r.push_back(constant_identity("sinc-sum-equals-sum-of-squares", "sum sin(n)/n = sum (sin(n)/n)^2 = (pi-1)/2",
                                {sum("sin(n)/n", sinc()), sum("(sin(n)/n)^2", sinc_pow(2))},
                                lin(Rational(-1, 2), Rational(1, 2))));
  r.push_back(constant_identity("sinc-squared-quartic", "sum sin(n)^2/n^4 = (pi-1)^2/6",
                                {sum("sin(n)^2/n^4", sin_n(1, 2) * inv(4))},
                                poly({Rational(1, 6), Rational(-1, 3), Rational(1, 6)})));
  r.push_back(constant_identity("even-sinc-sum", "over even n: sum sin(n)/n = sum (sin(n)/n)^2 = (pi-2)/4",
                                {sum("sin(2n)/(2n)", sinc(), IndexMode::even_part),
                                 sum("(sin(2n)/(2n))^2", sinc_pow(2), IndexMode::even_part)},
                                lin(Rational(-1, 2), Rational(1, 4))));
  r.push_back(constant_identity("odd-sinc-sum", "over odd n: sum sin(n)/n = sum (sin(n)/n)^2 = pi/4",
                                {sum("sin(2n-1)/(2n-1)", sinc(), IndexMode::odd_part),
                                 sum("(sin(2n-1)/(2n-1))^2", sinc_pow(2), IndexMode::odd_part)},
                                lin(0, Rational(1, 4))));
  r.push_back(constant_identity("alternating-sinc-sum", "sum (-1)^(n+1) sin(n)/n = sum (-1)^(n+1) (sin(n)/n)^2 = 1/2",
                                {sum("(-1)^(n+1) sin(n)/n", sinc(), IndexMode::alternate_sign),
                                 sum("(-1)^(n+1) (sin(n)/n)^2", sinc_pow(2), IndexMode::alternate_sign)},
                                Rational(1, 2)));
  r.push_back(constant_identity("even-sinc-squared-quartic", "sum sin(2n)^2/(2n)^4 = (pi-2)^2/24",
                                {sum("sin(2n)^2/(2n)^4", sin_n(1, 2) * inv(4), IndexMode::even_part)},
                                poly({Rational(1, 6), Rational(-1, 6), Rational(1, 24)})));
  r.push_back(constant_identity("odd-sinc-squared-quartic", "sum sin(2n-1)^2/(2n-1)^4 = pi^2/8 - pi/6",
                                {sum("sin(2n-1)^2/(2n-1)^4", sin_n(1, 2) * inv(4), IndexMode::odd_part)},
                                poly({0, Rational(-1, 6), Rational(1, 8)})));
  {
    std::vector<SeriesSum> sums;
    for (int k = 0; k <= 3; ++k) {
      sums.push_back(sum("(sin(n)/n)^" + std::to_string(k) + " sin(3n)/n", sinc_pow(k) * sin_n(3) * inv(1)));
    }
    r.push_back(constant_identity("sinc-powers-times-sin3n",
                                  "sum (sin(n)/n)^k sin(3n)/n = (pi-3)/2 for k = 0..3", std::move(sums),
                                  lin(Rational(-3, 2), Rational(1, 2))));
  }
  {
    Identity id = constant_identity(
        "sinc-fourth-power-times-sin3n", "sum (sin(n)/n)^4 sin(3n)/n is a quintic in pi, not (pi-3)/2",
        {with_known(sum("(sin(n)/n)^4 sin(3n)/n", sinc_pow(4) * sin_n(3) * inv(1)),
                    poly({Rational(-3, 2), Rational(27, 4), Rational(-343, 48), Rational(49, 16), Rational(-7, 12),
                          Rational(1, 24)}))},
        lin(Rational(-3, 2), Rational(1, 2)));
    r.push_back(negative(std::move(id)));
  }
  {
    std::vector<SeriesSum> sums;
    for (int k = 1; k <= 3; ++k) {
      sums.push_back(sum("(sin(n)/n)^" + std::to_string(k) + " cos(n)", sinc_pow(k) * cos_n(1)));
    }
    r.push_back(constant_identity("sinc-powers-times-cos", "sum (sin(n)/n)^k cos(n) = (pi-2)/4 for k = 1..3",
                                  std::move(sums), lin(Rational(-1, 2), Rational(1, 4))));
  }
  r.push_back(negative(constant_identity(
      "sinc-fourth-power-times-cos", "sum (sin(n)/n)^4 cos(n) = -1/2 + 23pi/96, not (pi-2)/4",
      {with_known(sum("(sin(n)/n)^4 cos(n)", sinc_pow(4) * cos_n(1)), lin(Rational(-1, 2), Rational(23, 96)))},
      lin(Rational(-1, 2), Rational(1, 4)))));
  for (int power : {3, 5}) {
    Identity id;
    id.id = "sinc-powers-times-cos" + std::string(power == 3 ? "-cubed" : "-fifth");
    id.description = "sum (sin(n)/n)^k cos(n)^" + std::to_string(power) + " for k = 1..3; equality is reported";
    for (int k = 1; k <= 3; ++k) {
      id.sums.push_back(sum("(sin(n)/n)^" + std::to_string(k) + " cos(n)^" + std::to_string(power),
                            sinc_pow(k) * cos_n(1, power)));
    }
    id.expectation = Expectation::report;
    r.push_back(std::move(id));
  }
  r.push_back(constant_identity(
      "third-fourth-power-at-one", "sum sin(n)^3/n = sum sin(n)^4/n^2 = pi/4",
      {sum("sin(n)^3/n", sin_n(1, 3) * inv(1)), sum("sin(n)^4/n^2", sin_n(1, 4) * inv(2))}, lin(0, Rational(1, 4))));
  r.push_back(constant_identity(
      "fifth-sixth-power-at-one", "sum sin(n)^5/n = sum sin(n)^6/n^2 = 3pi/16",
      {sum("sin(n)^5/n", sin_n(1, 5) * inv(1)), sum("sin(n)^6/n^2", sin_n(1, 6) * inv(2))}, lin(0, Rational(3, 16))));
  {
    Identity id;
    id.id = "seventh-eighth-power-at-one";
    id.description = "sum sin(n)^7/n = 9pi/64 differs from sum sin(n)^8/n^2 = (6+pi)pi/64";
    id.sums = {with_known(sum("sin(n)^7/n", sin_n(1, 7) * inv(1)), lin(0, Rational(9, 64))),
               with_known(sum("sin(n)^8/n^2", sin_n(1, 8) * inv(2)), poly({0, Rational(6, 64), Rational(1, 64)}))};
    id.expectation = Expectation::not_equal;
    r.push_back(std::move(id));
  }
  {
    // Sums of (sin(n)/n)^m; the integral of sinc^m over (0, inf) is q*pi for these.
    const Rational integral_over_pi[] = {Rational(1, 2), Rational(1, 2), Rational(3, 8),
                                         Rational(1, 3), Rational(115, 384), Rational(11, 40)};
    for (int m = 1; m <= 6; ++m) {
      r.push_back(constant_identity("sinc-power-" + std::to_string(m),
                                    "sum (sin(n)/n)^" + std::to_string(m) + " = -1/2 + integral of sinc^" +
                                        std::to_string(m),
                                    {sum("(sin(n)/n)^" + std::to_string(m), sinc_pow(m))},
                                    lin(Rational(-1, 2), integral_over_pi[m - 1])));
    }
    PiPoly seventh = poly({0, Rational(129423), Rational(-201684), Rational(144060), Rational(-54880), Rational(11760),
                           Rational(-1344), Rational(64)}) /
                         Rational(46080) +
                     PiPoly(Rational(-1, 2));
    r.push_back(constant_identity("sinc-power-7", "sum (sin(n)/n)^7 is a degree-7 polynomial in pi",
                                  {sum("(sin(n)/n)^7", sinc_pow(7))}, seventh));
    r.push_back(negative(constant_identity("sinc-power-7-vs-integral",
                                           "sum (sin(n)/n)^7 differs from -1/2 + 5887pi/23040",
                                           {sum("(sin(n)/n)^7", sinc_pow(7))},
                                           lin(Rational(-1, 2), Rational(5887, 23040)))));
  }
  {
    std::vector<SeriesSum> sums;
    for (int k = 0; k <= 3; ++k) {
      sums.push_back(sum("(sin(n)/n)^" + std::to_string(k) + " sin(3n)/(3n)",
                         scaled(Rational(1, 3), sinc_pow(k) * sin_n(3) * inv(1))));
    }
    r.push_back(constant_identity("sinc-powers-times-sin3n-over-3n",
                                  "sum (sin(n)/n)^k sin(3n)/(3n) = (pi-3)/6 for k = 0..3", std::move(sums),
                                  lin(Rational(-1, 2), Rational(1, 6))));
  }
  r.push_back(constant_identity("sine-over-cube", "sum sin(n)/n^3 = 1/12 - pi/4 + pi^2/6",
                                {sum("sin(n)/n^3", sin_n(1) * inv(3))},
                                poly({Rational(1, 12), Rational(-1, 4), Rational(1, 6)})));
  r.push_back(constant_identity(
      "gregory-variant", "sum sin(n pi/2)/n = sum sin(n pi/2) sin(n)/n^2 = pi/4",
      {sum("sin(n pi/2)/n", sin_n(pi_times(Rational(1, 2))) * inv(1)),
       sum("sin(n pi/2) sin(n)/n^2", sin_n(pi_times(Rational(1, 2))) * sin_n(1) * inv(2))},
      lin(0, Rational(1, 4))));
  {
    Identity id;
    id.id = "squared-series";
    id.description = "(sum c(n)/n)^2 = sum c(n)^2/n^2 = pi^2/8 with c(n) = (sin(n pi/4) + sin(3n pi/4))/sqrt(2)";
    SeriesSum a = sum("(sum c(n)/n)^2", sin_n(pi_times(Rational(1, 4))) * inv(1) +
                                            sin_n(pi_times(Rational(3, 4))) * inv(1));
    a.squared_scale = Rational(1, 2);
    id.sums = {a, sum("sum c(n)^2/n^2", inv(2), IndexMode::odd_part)};
    id.rhs = constant(poly({0, 0, Rational(1, 8)}));
    id.mode = VerificationMode::numeric_only;
    r.push_back(std::move(id));
  }

  // Identities in x.
  const XPolynomial sawtooth = sawtooth_line();
  r.push_back(interval_identity(
      "sawtooth-with-sinc-factor", "sum sin(nx)/n = sum sin(n) sin(nx)/n^2 = (pi-x)/2",
      {with_validity(sum("sin(nx)/n", sin_x(1) * inv(1)), open(0, two_pi)),
       with_validity(sum("sin(n) sin(nx)/n^2", sin_n(1) * sin_x(1) * inv(2)), closed(1, two_pi - Angle(1)))},
      sawtooth, closed(1, two_pi - Angle(1)),
      {{Angle(Rational(1, 2)), 1, lin(Rational(-1, 4), Rational(1, 4))}}));
  r.push_back(interval_identity(
      "even-sawtooth-with-sinc-factor", "over even n: both sums equal (pi-2x)/4",
      {with_validity(sum("sin(2nx)/(2n)", sin_x(1) * inv(1), IndexMode::even_part), open(0, pi)),
       with_validity(sum("sin(2n) sin(2nx)/(2n)^2", sin_n(1) * sin_x(1) * inv(2), IndexMode::even_part),
                     closed(1, pi - Angle(1)))},
      xpoly({lin(0, Rational(1, 4)), Rational(-1, 2)}), closed(1, pi - Angle(1)),
      {{Angle(Rational(1, 2)), 1, lin(Rational(-1, 4), Rational(1, 8))}}));
  r.push_back(interval_identity(
      "odd-sawtooth-with-sinc-factor", "over odd n: both sums equal pi/4",
      {with_validity(sum("sin((2n-1)x)/(2n-1)", sin_x(1) * inv(1), IndexMode::odd_part), open(0, pi)),
       with_validity(sum("sin(2n-1) sin((2n-1)x)/(2n-1)^2", sin_n(1) * sin_x(1) * inv(2), IndexMode::odd_part),
                     closed(1, pi - Angle(1)))},
      constant(lin(0, Rational(1, 4))), closed(1, pi - Angle(1)),
      {{Angle(Rational(1, 2)), 1, lin(0, Rational(1, 8))}}));
  r.push_back(interval_identity(
      "alternating-sawtooth-with-sinc-factor", "with signs (-1)^(n+1): both sums equal x/2",
      {with_validity(sum("(-1)^(n+1) sin(nx)/n", sin_x(1) * inv(1), IndexMode::alternate_sign), open(-pi, pi)),
       with_validity(
           sum("(-1)^(n+1) sin(n) sin(nx)/n^2", sin_n(1) * sin_x(1) * inv(2), IndexMode::alternate_sign),
           closed(1, pi - Angle(1)))},
      xpoly({0, Rational(1, 2)}), closed(1, pi - Angle(1)),
      // (pi - x)(pi - 1)/2 at x = 5/2
      {{Angle(Rational(5, 2)), 1, poly({Rational(5, 4), Rational(-7, 4), Rational(1, 2)})}}));
  {
    std::vector<SeriesSum> sums;
    for (int k = 0; k <= 3; ++k) {
      Interval v = k == 0 ? open(0, two_pi) : closed(Angle(k), two_pi - Angle(k));
      sums.push_back(with_validity(
          sum("(sin(n)/n)^" + std::to_string(k) + " sin(nx)/n", sinc_pow(k) * sin_x(1) * inv(1)), v));
    }
    r.push_back(interval_identity("sinc-powers-sawtooth",
                                  "sum (sin(n)/n)^k sin(nx)/n = (pi-x)/2 for k = 0..3 on [3, 2pi-3]",
                                  std::move(sums), sawtooth, closed(3, two_pi - Angle(3)),
                                  {{Angle(Rational(5, 2)), 3, cubic_middle().evaluate(Angle(Rational(5, 2)))},
                                   {Angle(Rational(3, 2)), 2, quadratic_left().evaluate(Angle(Rational(3, 2)))}}));
  }
  r.push_back(interval_identity("quadratic-piece-left", "sum sin(n)^2 sin(nx)/n^3 = (pi-1)x/2 - pi x^2/8 on [0, 2]",
                                {sum("sin(n)^2 sin(nx)/n^3", sin_n(1, 2) * sin_x(1) * inv(3))}, quadratic_left(),
                                closed(0, 2)));
  r.push_back(interval_identity("quadratic-piece-right", "sum sin(n)^2 sin(nx)/n^3 = (pi-x)/2 on [2, pi]",
                                {sum("sin(n)^2 sin(nx)/n^3", sin_n(1, 2) * sin_x(1) * inv(3))}, sawtooth,
                                closed(2, pi)));
  r.push_back(interval_identity("cubic-piece-left", "sum sin(n)^3 sin(nx)/n^4 on [0, 1]",
                                {sum("sin(n)^3 sin(nx)/n^4", sin_n(1, 3) * sin_x(1) * inv(4))}, cubic_left(),
                                closed(0, 1)));
  r.push_back(interval_identity("cubic-piece-middle", "sum sin(n)^3 sin(nx)/n^4 on [1, 3]",
                                {sum("sin(n)^3 sin(nx)/n^4", sin_n(1, 3) * sin_x(1) * inv(4))}, cubic_middle(),
                                closed(1, 3)));
  r.push_back(interval_identity("cubic-piece-right", "sum sin(n)^3 sin(nx)/n^4 = (pi-x)/2 on [3, pi]",
                                {sum("sin(n)^3 sin(nx)/n^4", sin_n(1, 3) * sin_x(1) * inv(4))}, sawtooth,
                                closed(3, pi)));
  {
    const Rational b(1, 3);
    r.push_back(interval_identity("tent-inner", "sum sin(n/3) sin(nx)/n^2 = x(pi - 1/3)/2 on [0, 1/3]",
                                  {sum("sin(n/3) sin(nx)/n^2", sin_n(b) * sin_x(1) * inv(2))},
                                  xpoly({0, lin(Rational(-b / 2), Rational(1, 2))}), closed(0, b)));
    r.push_back(interval_identity("tent-outer", "sum sin(n/3) sin(nx)/n^2 = (pi - x)/6 on [1/3, pi]",
                                  {sum("sin(n/3) sin(nx)/n^2", sin_n(b) * sin_x(1) * inv(2))},
                                  xpoly({lin(0, Rational(b / 2)), Rational(-b / 2)}), closed(b, pi)));
  }
  r.push_back(interval_identity(
      "gregory-function-left", "sum sin(n pi/2) sin(nx)/n^2 = pi x/4 on [0, pi/2]",
      {sum("sin(n pi/2) sin(nx)/n^2", sin_n(pi_times(Rational(1, 2))) * sin_x(1) * inv(2))},
      xpoly({0, lin(0, Rational(1, 4))}), closed(0, pi_times(Rational(1, 2)))));
  r.push_back(interval_identity(
      "gregory-function-right", "sum sin(n pi/2) sin(nx)/n^2 = pi(pi-x)/4 on [pi/2, pi]",
      {sum("sin(n pi/2) sin(nx)/n^2", sin_n(pi_times(Rational(1, 2))) * sin_x(1) * inv(2))},
      xpoly({poly({0, 0, Rational(1, 4)}), lin(0, Rational(-1, 4))}), closed(pi_times(Rational(1, 2)), pi)));
  r.push_back(interval_identity("third-power-plateau", "sum sin(nx)^3/n = pi/4 on (0, 2pi/3)",
                                {sum("sin(nx)^3/n", sin_x(1, 3) * inv(1))}, constant(lin(0, Rational(1, 4))),
                                open(0, pi_times(Rational(2, 3))), {{Angle(Rational(5, 2)), 0, PiPoly(0)}}));
  r.push_back(interval_identity("third-power-zero", "sum sin(nx)^3/n = 0 on (2pi/3, pi]",
                                {sum("sin(nx)^3/n", sin_x(1, 3) * inv(1))}, constant(0),
                                half_open(pi_times(Rational(2, 3)), pi)));
  r.push_back(interval_identity("fourth-power-linear", "sum sin(nx)^4/n^2 = pi x/4 on [0, pi/2]",
                                {sum("sin(nx)^4/n^2", sin_x(1, 4) * inv(2))}, xpoly({0, lin(0, Rational(1, 4))}),
                                closed(0, pi_times(Rational(1, 2))), {{Angle(2), 0, std::nullopt}}));
  r.push_back(interval_identity("fifth-power-plateau", "sum sin(nx)^5/n = 3pi/16 on (0, 2pi/5)",
                                {sum("sin(nx)^5/n", sin_x(1, 5) * inv(1))}, constant(lin(0, Rational(3, 16))),
                                open(0, pi_times(Rational(2, 5))),
                                {{Angle(Rational(3, 2)), 0, lin(0, Rational(1, 4))}}));
  r.push_back(interval_identity("fifth-power-second-level", "sum sin(nx)^5/n = pi/4 on (2pi/5, 2pi/3)",
                                {sum("sin(nx)^5/n", sin_x(1, 5) * inv(1))}, constant(lin(0, Rational(1, 4))),
                                open(pi_times(Rational(2, 5)), pi_times(Rational(2, 3)))));
  r.push_back(interval_identity("fifth-power-third-level", "sum sin(nx)^5/n = -pi/16 on (2pi/3, 4pi/5)",
                                {sum("sin(nx)^5/n", sin_x(1, 5) * inv(1))}, constant(lin(0, Rational(-1, 16))),
                                open(pi_times(Rational(2, 3)), pi_times(Rational(4, 5)))));
  r.push_back(interval_identity("fifth-power-zero", "sum sin(nx)^5/n = 0 on (4pi/5, pi]",
                                {sum("sin(nx)^5/n", sin_x(1, 5) * inv(1))}, constant(0),
                                half_open(pi_times(Rational(4, 5)), pi)));
  r.push_back(interval_identity("sixth-power-linear", "sum sin(nx)^6/n^2 = 3pi x/16 on [0, pi/3]",
                                {sum("sin(nx)^6/n^2", sin_x(1, 6) * inv(2))}, xpoly({0, lin(0, Rational(3, 16))}),
                                closed(0, pi_times(Rational(1, 3))), {{Angle(Rational(3, 2)), 0, std::nullopt}}));
  r.push_back(interval_identity("alternating-sawtooth", "sum (-1)^(n+1) sin(nx)/n = x/2 on (-pi, pi)",
                                {sum("(-1)^(n+1) sin(nx)/n", sin_x(1) * inv(1), IndexMode::alternate_sign)},
                                xpoly({0, Rational(1, 2)}), open(-pi, pi), {{Angle(4), 0, lin(2, -1)}}));
  r.push_back(interval_identity(
      "triple-angle-reduction", "4 sum sin(nx)^3/n - 3 sum sin(nx)/n = -(pi-3x)/2 on (0, 2pi/3)",
      {sum("sum (4 sin(nx)^3 - 3 sin(nx))/n", scaled(4, sin_x(1, 3) * inv(1)) + scaled(-3, sin_x(1) * inv(1)))},
      xpoly({lin(0, Rational(-1, 2)), Rational(3, 2)}), open(0, pi_times(Rational(2, 3)))));
  r.push_back(interval_identity("alternating-cosine-parabola",
                                "sum (-1)^(n+1) cos(nx)/n^2 = (pi^2 - 3x^2)/12 on [-pi, pi]",
                                {sum("(-1)^(n+1) cos(nx)/n^2", cos_x(1) * inv(2), IndexMode::alternate_sign)},
                                xpoly({poly({0, 0, Rational(1, 12)}), 0, Rational(-1, 4)}), closed(-pi, pi)));
  r.push_back(interval_identity("sine-squared-parabola", "sum sin(nx)^2/n^2 = x(pi-x)/2 on [0, pi]",
                                {sum("sin(nx)^2/n^2", sin_x(1, 2) * inv(2))},
                                xpoly({0, lin(0, Rational(1, 2)), Rational(-1, 2)}), closed(0, pi)));
  r.push_back(interval_identity(
      "alternating-sine-squared", "sum (-1)^(n+1) sin(nx)^2/n^2 = x^2/2 on [-pi/2, pi/2]",
      {sum("(-1)^(n+1) sin(nx)^2/n^2", sin_x(1, 2) * inv(2), IndexMode::alternate_sign)},
      xpoly({0, 0, Rational(1, 2)}), closed(pi_times(Rational(-1, 2)), pi_times(Rational(1, 2)))));
  r.push_back(interval_identity("even-sine-squared", "sum sin(2nx)^2/(2n)^2 = x(pi-2x)/4 on [0, pi/2]",
                                {sum("sin(2nx)^2/(2n)^2", sin_x(1, 2) * inv(2), IndexMode::even_part)},
                                xpoly({0, lin(0, Rational(1, 4)), Rational(-1, 2)}),
                                closed(0, pi_times(Rational(1, 2)))));
  r.push_back(interval_identity("odd-sine-squared", "sum sin((2n-1)x)^2/(2n-1)^2 = pi x/4 on [0, pi/2]",
                                {sum("sin((2n-1)x)^2/(2n-1)^2", sin_x(1, 2) * inv(2), IndexMode::odd_part)},
                                xpoly({0, lin(0, Rational(1, 4))}), closed(0, pi_times(Rational(1, 2)))));

  // Functions on [0, pi] and their sine series.
  r.push_back(sine_series_identity("sawtooth-function-coefficients", "(pi-x)/2 on [0, pi] has coefficients 1/n",
                                   {{0, pi, sawtooth}}, inv(1)));
  r.push_back(sine_series_identity("kink-function-coefficients",
                                   "x(pi-1)/2 on [0, 1], (pi-x)/2 on [1, pi] has coefficients sin(n)/n^2",
                                   {{0, 1, xpoly({0, lin(Rational(-1, 2), Rational(1, 2))})}, {1, pi, sawtooth}},
                                   sin_n(1) * inv(2)));
  {
    const Rational b(1, 3);
    r.push_back(sine_series_identity(
        "tent-function-coefficients", "x(pi-b)/2 on [0, b], b(pi-x)/2 on [b, pi] with b = 1/3",
        {{0, b, xpoly({0, lin(Rational(-b / 2), Rational(1, 2))})}, {b, pi, xpoly({lin(0, Rational(b / 2)), Rational(-b / 2)})}},
        sin_n(b) * inv(2)));
  }
  r.push_back(sine_series_identity("quadratic-function-coefficients", "quadratic-then-linear function",
                                   {{0, 2, quadratic_left()}, {2, pi, sawtooth}}, sin_n(1, 2) * inv(3)));
  r.push_back(sine_series_identity("cubic-function-coefficients", "cubic-cubic-linear function",
                                   {{0, 1, cubic_left()}, {1, 3, cubic_middle()}, {3, pi, sawtooth}},
                                   sin_n(1, 3) * inv(4)));
  r.push_back(sine_series_identity(
      "even-kink-function-coefficients", "three linear pieces with coefficients (1 + (-1)^n) sin(n)/(2n^2)",
      {{0, 1, xpoly({0, lin(Rational(-1, 2), Rational(1, 4))})},
       {1, pi - Angle(1), xpoly({lin(0, Rational(1, 4)), Rational(-1, 2)})},
       {pi - Angle(1), pi, xpoly({poly({0, Rational(1, 2), Rational(-1, 4)}), lin(Rational(-1, 2), Rational(1, 4))})}},
      scaled(Rational(1, 2), sin_n(1) * inv(2)) + scaled(Rational(1, 2), sin_n(1) * cos_n(pi) * inv(2))));
  r.push_back(sine_series_identity(
      "gregory-function-coefficients", "pi x/4 on [0, pi/2], pi(pi-x)/4 on [pi/2, pi]",
      {{0, pi_times(Rational(1, 2)), xpoly({0, lin(0, Rational(1, 4))})},
       {pi_times(Rational(1, 2)), pi, xpoly({poly({0, 0, Rational(1, 4)}), lin(0, Rational(-1, 4))})}},
      sin_n(pi_times(Rational(1, 2))) * inv(2)));
  r.push_back(sine_series_identity(
      "third-power-step-coefficients", "pi/4 on [0, 2pi/3], 0 on [2pi/3, pi] has coefficients sin(n pi/3)^2/n",
      {{0, pi_times(Rational(2, 3)), constant(lin(0, Rational(1, 4)))}, {pi_times(Rational(2, 3)), pi, constant(0)}},
      sin_n(pi_times(Rational(1, 3)), 2) * inv(1)));
  r.push_back(sine_series_identity(
      "fifth-power-step-coefficients",
      "levels 3pi/16, pi/4, -pi/16, 0 have coefficients (3 + cos(2n pi/5) + cos(4n pi/5) - 5cos(2n pi/3))/(8n)",
      {{0, pi_times(Rational(2, 5)), constant(lin(0, Rational(3, 16)))},
       {pi_times(Rational(2, 5)), pi_times(Rational(2, 3)), constant(lin(0, Rational(1, 4)))},
       {pi_times(Rational(2, 3)), pi_times(Rational(4, 5)), constant(lin(0, Rational(-1, 16)))},
       {pi_times(Rational(4, 5)), pi, constant(0)}},
      scaled(Rational(3, 8), inv(1)) + scaled(Rational(1, 8), cos_n(pi_times(Rational(2, 5))) * inv(1)) +
          scaled(Rational(1, 8), cos_n(pi_times(Rational(4, 5))) * inv(1)) +
          scaled(Rational(-5, 8), cos_n(pi_times(Rational(2, 3))) * inv(1))));
  return r;
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct SumEstimate {
  Rational value;
  double bound;
};

SumEstimate numeric_series_sum(const SeriesSum& s, const Angle& x, long N, int digits) {
  ProductExpression e = s.expr.has_x() ? s.expr.substitute(x) : s.expr;
  SeriesExpression series = index_transform(expand_products(e), s.mode);
  if (series.empty()) return {Rational(0), 0.0};
  PartialSumResult r = partial_sum(series, N, digits);
  if (!s.squared_scale) return {r.value, r.tail_bound};
  // |v^2 - w^2| <= |v - w| (2|v| + |v - w|)
  const double v = std::fabs(r.value.get_d());
  const double scale = std::fabs(s.squared_scale->get_d());
  return {Rational(*s.squared_scale * r.value * r.value), scale * r.tail_bound * (2 * v + r.tail_bound) * (1 + 1e-12)};
}

std::string decimal(const Rational& q, int digits) { return format_fixed(q, digits); }

bool within(const Rational& a, const Rational& b, double tol) { return abs(Rational(a - b)) <= Rational(tol); }

VerificationReport verify_sine_series(const Identity& id, CheckMode mode) {
  VerificationReport rep;
  rep.id = id.id;
  const CoefficientFormula integral = sine_integral(*id.function);
  bool equal = false;
  if (mode == CheckMode::exact) {
    equal = canonical_equal(integral, PiPoly::linear(0, Rational(1, 2)) * id.coefficients) == FormulaComparison::equal;
    try {
      rep.details.emplace_back("coefficients", sine_coefficients(*id.function).str());
    } catch (const NotInPiRing&) {
      rep.details.emplace_back("integral of f(x) sin(nx)", integral.str());
    }
  } else {
    double worst = 0;
    for (long n = 1; n <= 12; ++n) {
      double b = 2 / M_PI * coefficient_approx(integral, n);
      worst = std::max(worst, std::fabs(b - coefficient_approx(id.coefficients, n)));
    }
    equal = worst < 1e-12;
    rep.details.emplace_back("max residual n=1..12", std::to_string(worst));
  }
  rep.details.emplace_back("expected", id.coefficients.str());
  rep.details.emplace_back("match", equal ? "yes" : "no");
  rep.status = equal == (id.expectation != Expectation::not_equal) ? Status::pass : Status::fail;
  return rep;
}

VerificationReport verify_constant_exact(const Identity& id) {
  VerificationReport rep;
  rep.id = id.id;
  bool ok = true;
  std::vector<PiPoly> values;
  for (const auto& s : id.sums) {
    PiPoly v = evaluate_series_sum(s);
    rep.details.emplace_back(s.label, v.str());
    if (s.known && !(v == *s.known)) {
      ok = false;
      rep.details.emplace_back(s.label + " expected", s.known->str());
    }
    values.push_back(std::move(v));
  }
  bool all_equal_rhs = true, all_differ_rhs = true, all_same = true;
  const PiPoly rhs = id.rhs ? id.rhs->coeff(0) : PiPoly();
  for (const auto& v : values) {
    if (id.rhs) {
      all_equal_rhs = all_equal_rhs && v == rhs;
      all_differ_rhs = all_differ_rhs && !(v == rhs);
    }
    all_same = all_same && v == values.front();
  }
  if (id.rhs) rep.details.emplace_back("rhs", rhs.str());
  switch (id.expectation) {
    case Expectation::equal:
      ok = ok && id.rhs && all_equal_rhs;
      break;
    case Expectation::not_equal:
      ok = ok && (id.rhs ? all_differ_rhs : !all_same);
      break;
    case Expectation::report:
      rep.details.emplace_back("all sums equal", all_same ? "yes" : "no");
      break;
  }
  rep.status = ok ? Status::pass : Status::fail;
  return rep;
}

VerificationReport verify_constant_numeric(const Identity& id, int digits, long N) {
  VerificationReport rep;
  rep.id = id.id;
  const double slack = std::pow(10.0, -digits);
  const long bits = bits_for_digits(digits);
  bool ok = true;
  std::vector<SumEstimate> values;
  for (const auto& s : id.sums) {
    SumEstimate v = numeric_series_sum(s, Angle(), N, digits);
    std::ostringstream bound;
    bound << v.bound;
    rep.details.emplace_back(s.label, decimal(v.value, std::min(digits, 20)) + " +- " + bound.str());
    if (s.known && !within(v.value, approximate(*s.known, bits), v.bound + slack)) ok = false;
    values.push_back(std::move(v));
  }
  bool all_equal_rhs = true, all_differ_rhs = true, some_pair_differs = false;
  if (id.rhs) {
    const Rational rhs = approximate(id.rhs->coeff(0), bits);
    rep.details.emplace_back("rhs", decimal(rhs, std::min(digits, 20)));
    for (const auto& v : values) {
      const bool close = within(v.value, rhs, v.bound + slack);
      all_equal_rhs = all_equal_rhs && close;
      all_differ_rhs = all_differ_rhs && !close;
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (!within(values[i].value, values[j].value, values[i].bound + values[j].bound + 2 * slack)) {
        some_pair_differs = true;
      }
    }
  }
  switch (id.expectation) {
    case Expectation::equal:
      ok = ok && id.rhs && all_equal_rhs;
      break;
    case Expectation::not_equal:
      ok = ok && (id.rhs ? all_differ_rhs : some_pair_differs);
      break;
    case Expectation::report:
      rep.details.emplace_back("all sums agree numerically", some_pair_differs ? "no" : "yes");
      break;
  }
  rep.details.emplace_back("N", std::to_string(N));
  rep.status = ok ? Status::pass : Status::fail;
  return rep;
}

VerificationReport verify_interval_numeric(const Identity& id, int digits, long N) {
  VerificationReport rep;
  rep.id = id.id;
  const double slack = std::pow(10.0, -digits);
  const long bits = bits_for_digits(digits);
  bool ok = true;
  for (const auto& s : id.sums) {
    const Interval& v = s.validity ? *s.validity : *id.validity;
    for (const Angle& x : interior_points(v, 1)) {
      SumEstimate got = numeric_series_sum(s, x, N, digits);
      const Rational want = approximate(id.rhs->evaluate(x), bits);
      const bool close = within(got.value, want, got.bound + slack);
      ok = ok && close;
      std::ostringstream os;
      os << decimal(got.value, 15) << " vs " << decimal(want, 15) << " (bound " << got.bound << ")";
      rep.details.emplace_back(s.label + " at x = " + x.str(), os.str());
    }
  }
  rep.details.emplace_back("N", std::to_string(N));
  rep.status = ok ? Status::pass : Status::fail;
  return rep;
}

}  // namespace

bool Interval::contains(const Angle& x) const {
  const int a = compare(x, lo.at);
  const int b = compare(x, hi.at);
  return (a > 0 || (a == 0 && lo.closed)) && (b < 0 || (b == 0 && hi.closed));
}

std::string Interval::str() const {
  return std::string(lo.closed ? "[" : "(") + lo.at.str() + ", " + hi.at.str() + (hi.closed ? "]" : ")");
}

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::equal:
      return "equal";
    case Expectation::not_equal:
      return "not_equal";
    case Expectation::report:
      return "report";
  }
  return "?";
}

const char* to_string(VerificationMode m) { return m == VerificationMode::exact ? "exact" : "numeric_only"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "?";
}

bool Identity::has_x() const {
  for (const auto& s : sums) {
    if (s.expr.has_x()) return true;
  }
  return false;
}

const std::vector<Identity>& list_identities() {
  static const std::vector<Identity> registry = build_registry();
  return registry;
}

const Identity& find_identity(const std::string& id) {
  for (const auto& entry : list_identities()) {
    if (entry.id == id) return entry;
  }
  throw UnknownIdentity("no identity with id '" + id + "'");
}

PiPoly evaluate_series_sum(const SeriesSum& sum, const Angle& x) {
  ProductExpression e = sum.expr.has_x() ? sum.expr.substitute(x) : sum.expr;
  PiPoly v = sum_closed_form(index_transform(expand_products(e), sum.mode));
  if (sum.squared_scale) v = *sum.squared_scale * (v * v);
  return v;
}

std::vector<Angle> interior_points(const Interval& interval, int samples) {
  std::vector<Angle> out;
  const Angle& a = interval.lo.at;
  const Angle& b = interval.hi.at;
  const double a_approx = a.approx(), b_approx = b.approx();
  for (int k = 1; k <= samples; ++k) {
    // A rational point with a small denominator ...
    const double t = a_approx + (k - 0.35) / samples * (b_approx - a_approx);
    Angle q(make_rational(std::lround(t * 97), 97));
    if (compare(q, a) > 0 && compare(q, b) < 0) out.push_back(q);
    // ... and an exact fraction of the interval.
    out.push_back(a + make_rational(k, samples + 1) * (b - a));
  }
  return out;
}

VerificationReport verify_on_interval(const Identity& id, int samples) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = id.id;
  try {
    if (!id.has_x() || !id.validity || !id.rhs) throw InvalidArgument(id.id + " is not an identity in x");
    bool ok = true;
    int checked = 0;
    for (const auto& s : id.sums) {
      const Interval& v = s.validity ? *s.validity : *id.validity;
      std::vector<Angle> points = interior_points(v, samples);
      if (v.lo.closed) points.push_back(v.lo.at);
      if (v.hi.closed) points.push_back(v.hi.at);
      int failures = 0;
      for (const Angle& x : points) {
        PiPoly got = evaluate_series_sum(s, x);
        PiPoly want = id.rhs->evaluate(x);
        ++checked;
        if (!(got == want)) {
          ++failures;
          rep.details.emplace_back(s.label + " at x = " + x.str(), got.str() + " != " + want.str());
        }
      }
      rep.details.emplace_back(s.label + " on " + v.str(),
                               std::to_string(points.size() - failures) + "/" + std::to_string(points.size()) +
                                   " points equal");
      ok = ok && failures == 0;
    }
    for (const auto& ext : id.exterior) {
      const SeriesSum& s = id.sums.at(ext.sum);
      PiPoly got = evaluate_series_sum(s, ext.x);
      PiPoly rhs = id.rhs->evaluate(ext.x);
      bool differs = !(got == rhs);
      bool matches = !ext.expected || got == *ext.expected;
      rep.details.emplace_back(s.label + " at exterior x = " + ext.x.str(),
                               got.str() + (differs ? " differs from " : " equals ") + rhs.str());
      ok = ok && differs && matches;
    }
    rep.details.emplace_back("points checked", std::to_string(checked));
    if (id.expectation == Expectation::not_equal) ok = !ok;
    rep.status = ok ? Status::pass : Status::fail;
  } catch (const Error& e) {
    rep.status = Status::error;
    rep.details.emplace_back("error", e.what());
  }
  rep.runtime_seconds = elapsed(start);
  return rep;
}

VerificationReport verify_on_interval(const std::string& id, int samples) {
  return verify_on_interval(find_identity(id), samples);
}

VerificationReport verify_identity(const Identity& id, CheckMode mode, int digits, long N) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = id.id;
  try {
    if (digits < 1) throw InvalidArgument("digits must be positive");
    const bool numeric = mode == CheckMode::numeric || id.mode == VerificationMode::numeric_only;
    if (id.is_sine_series()) {
      rep = verify_sine_series(id, numeric ? CheckMode::numeric : CheckMode::exact);
    } else if (id.has_x()) {
      rep = numeric ? verify_interval_numeric(id, digits, N) : verify_on_interval(id);
    } else {
      rep = numeric ? verify_constant_numeric(id, digits, N) : verify_constant_exact(id);
    }
    if (numeric && mode == CheckMode::exact) rep.details.emplace_back("mode", "numeric (identity is numeric-only)");
  } catch (const Error& e) {
    rep.status = Status::error;
    rep.details.emplace_back("error", e.what());
  }
  rep.runtime_seconds = elapsed(start);
  return rep;
}

VerificationReport verify_identity(const std::string& id, CheckMode mode, int digits, long N) {
  return verify_identity(find_identity(id), mode, digits, N);
}

}  // namespace fourierlab
