#pragma once

// Independent oracles for the unit tests. Nothing here calls the summation,
// expansion or integration code under test.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "fourierlab/closedform.hpp"

namespace testing {

// First 60 decimals of pi, as published.
inline const std::string kPiDigits = "3.141592653589793238462643383279502884197169399375105820974944";

inline long double pi_ld() { return 3.141592653589793238462643383279502884L; }

inline long double eval_pipoly(const fourierlab::PiPoly& p) {
  long double acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * pi_ld() + static_cast<long double>(p.coeff(k).get_d());
  return acc;
}

inline long double eval_angle(const fourierlab::Angle& a) {
  return static_cast<long double>(a.r.get_d()) + static_cast<long double>(a.s.get_d()) * pi_ld();
}

// Term n of a product expression evaluated directly from its factors.
inline long double product_term(const fourierlab::ProductExpression& e, long n, long double x = 0) {
  long double total = 0;
  for (const auto& t : e.terms) {
    long double v = eval_pipoly(t.c);
    for (const auto& f : t.factors) {
      const long double arg =
          (eval_angle(f.arg.base) + static_cast<long double>(f.arg.x_coef.get_d()) * x) * static_cast<long double>(n);
      const long double s = f.kind == fourierlab::TrigKind::sin ? std::sin(arg) : std::cos(arg);
      v *= std::pow(s, f.power);
    }
    v /= std::pow(static_cast<long double>(n), t.p);
    total += v;
  }
  return total;
}

// Plain Kahan-compensated sum of the first N terms.
inline long double direct_sum(const fourierlab::ProductExpression& e, long N, long double x = 0) {
  long double sum = 0, comp = 0;
  for (long n = 1; n <= N; ++n) {
    const long double y = product_term(e, n, x) - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// 20-point Gauss-Legendre rule on [a, b], composite over `panels`.
inline long double integrate(const std::function<long double(long double)>& f, long double a, long double b,
                             int panels = 64) {
  static const std::array<long double, 10> nodes = {
      0.0765265211334973337546404093988382L, 0.2277858511416450780804961953685746L,
      0.3737060887154195606725481770249272L, 0.5108670019508270980043640509552510L,
      0.6360536807265150254528366962262859L, 0.7463319064601507926143050703556416L,
      0.8391169718222188233945290617015207L, 0.9122344282513259058677524412032981L,
      0.9639719272779137912676661311972772L, 0.9931285991850949247861223884713203L};
  static const std::array<long double, 10> weights = {
      0.1527533871307258506980843319550976L, 0.1491729864726037467878287370019694L,
      0.1420961093183820513292983250671649L, 0.1316886384491766268984944997481631L,
      0.1181945319615184173123773777113823L, 0.1019301198172404350367501354803499L,
      0.0832767415767047487247581432220463L, 0.0626720483341090635695065351870416L,
      0.0406014298003869413310399522749322L, 0.0176140071391521183118619623518528L};
  long double total = 0;
  const long double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const long double mid = a + (k + 0.5L) * h, half = h / 2;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      total += weights[i] * half * (f(mid - half * nodes[i]) + f(mid + half * nodes[i]));
    }
  }
  return total;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace testing
