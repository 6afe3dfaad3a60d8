#include "fourierlab/closedform.hpp"

#include <mutex>
#include <sstream>

#include "fourierlab/errors.hpp"

namespace fourierlab {

std::string AngleExpr::str() const {
  std::string out;
  if (!base.is_zero() || !has_x()) out = base.str();
  if (has_x()) {
    if (!out.empty()) out += " + ";
    out += x_coef == 1 ? std::string("x") : to_string(x_coef) + "*x";
  }
  return out;
}

int ProductTerm::trig_degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.power;
  return d;
}

std::string ProductTerm::str() const {
  std::ostringstream os;
  os << "(" << c.str() << ")";
  for (const auto& f : factors) {
    os << "*" << to_string(f.kind) << "((" << f.arg.str() << ")*n)";
    if (f.power != 1) os << "^" << f.power;
  }
  if (p == 1) os << "/n";
  if (p > 1) os << "/n^" << p;
  if (p < 0) os << "*n^" << -p;
  return os.str();
}

bool ProductExpression::has_x() const {
  for (const auto& t : terms)
    for (const auto& f : t.factors)
      if (f.arg.has_x()) return true;
  return false;
}

ProductExpression ProductExpression::substitute(const Angle& x) const {
  ProductExpression out = *this;
  for (auto& t : out.terms)
    for (auto& f : t.factors) f.arg = AngleExpr{f.arg.at(x), 0};
  return out;
}

std::string ProductExpression::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += t.str();
  }
  return out;
}

ProductExpression& ProductExpression::operator+=(const ProductExpression& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

namespace {

ProductTerm multiply_terms(const ProductTerm& a, const ProductTerm& b) {
  ProductTerm out{a.c * b.c, a.factors, a.p + b.p};
  for (const auto& f : b.factors) {
    bool merged = false;
    for (auto& g : out.factors) {
      if (g.kind == f.kind && g.arg == f.arg) {
        g.power += f.power;
        merged = true;
        break;
      }
    }
    if (!merged) out.factors.push_back(f);
  }
  return out;
}

}  // namespace

ProductExpression operator*(const ProductExpression& a, const ProductExpression& b) {
  ProductExpression out;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) out.terms.push_back(multiply_terms(ta, tb));
  return out;
}

ProductExpression operator*(const PiPoly& s, const ProductExpression& a) {
  ProductExpression out = a;
  for (auto& t : out.terms) t.c = s * t.c;
  return out;
}

ProductExpression ProductExpression::pow(unsigned exponent) const {
  ProductExpression out = scalar(PiPoly(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

ProductExpression trig_factor(TrigKind kind, const AngleExpr& arg, int power) {
  return ProductExpression{{ProductTerm{PiPoly(1), {TrigFactor{kind, arg, power}}, 0}}};
}

ProductExpression scalar(const PiPoly& c) { return ProductExpression{{ProductTerm{c, {}, 0}}}; }

ProductExpression inverse_n_power(int p) { return ProductExpression{{ProductTerm{PiPoly(1), {}, p}}}; }

SeriesExpression expand_products(const ProductExpression& e) {
  SeriesExpression out;
  for (const auto& t : e.terms) {
    if (t.trig_degree() > ProductExpression::kMaxTrigDegree)
      throw DegreeOverflow("trigonometric degree " + std::to_string(t.trig_degree()) + " exceeds " +
                           std::to_string(ProductExpression::kMaxTrigDegree));
    if (t.p < 0) throw InvalidArgument("term " + t.str() + " has a positive power of n");
    CoefficientFormula acc = CoefficientFormula::constant(t.c);
    for (const auto& f : t.factors) {
      if (f.arg.has_x()) throw InvalidArgument("expression still depends on x; substitute a value first");
      if (f.power < 0) throw InvalidArgument("negative power of a trigonometric factor");
      for (int i = 0; i < f.power; ++i) acc = acc.times_trig(f.kind, f.arg.base);
    }
    out += acc.shift_power(t.p);
  }
  return out;
}

Rational BernoulliPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational bernoulli_number(int k) {
  static std::mutex mutex;
  static std::vector<Rational> numbers{Rational(1)};
  if (k < 0) throw InvalidArgument("negative Bernoulli index");
  std::lock_guard lock(mutex);
  while (static_cast<int>(numbers.size()) <= k) {
    const auto m = static_cast<unsigned>(numbers.size());
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += binomial(m + 1, j) * numbers[j];
    numbers.push_back(-acc / Rational(m + 1));
  }
  return numbers[static_cast<std::size_t>(k)];
}

BernoulliPoly bernoulli_polynomial(int k) {
  if (k < 0) throw InvalidArgument("negative Bernoulli index");
  BernoulliPoly b{k, std::vector<Rational>(static_cast<std::size_t>(k) + 1)};
  for (int j = 0; j <= k; ++j)
    b.coeffs[static_cast<std::size_t>(k - j)] =
        binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * bernoulli_number(j);
  return b;
}

PiPoly sum_term(const TrigTerm& t) {
  const bool admissible = (t.kind == TrigKind::sin && t.p >= 1 && t.p % 2 == 1) ||
                          (t.kind == TrigKind::cos && t.p >= 2 && t.p % 2 == 0);
  if (!admissible)
    throw NotClosedForm("term " + t.str() + " has no closed form in Q[pi]: need sin with odd p >= 1 " +
                        "or cos with even p >= 2");
  // sum trig(beta n)/n^p = (-1)^(k+1) (2 pi)^p B_p(beta / 2pi) / (2 p!),
  // with p = 2k+1 for sin and p = 2k for cos, and beta in [0, 2pi).
  const int p = t.p;
  const int k = t.kind == TrigKind::sin ? (p - 1) / 2 : p / 2;
  const BernoulliPoly bp = bernoulli_polynomial(p);
  const PiPoly beta = t.beta.to_pipoly();
  const PiPoly two_pi = PiPoly::linear(0, 2);
  PiPoly scaled;  // (2 pi)^p B_p(beta / 2pi)
  for (int m = 0; m <= p; ++m) {
    const Rational& coef = bp.coeffs[static_cast<std::size_t>(m)];
    if (coef == 0) continue;
    scaled += coef * beta.pow(static_cast<unsigned>(m)) * two_pi.pow(static_cast<unsigned>(p - m));
  }
  Rational factor = Rational(1) / (2 * factorial(static_cast<unsigned>(p)));
  if ((k + 1) % 2 != 0) factor = -factor;
  return t.c * (scaled * factor);
}

PiPoly sum_closed_form(const SeriesExpression& e) {
  PiPoly total;
  for (const auto& t : e.terms()) total += sum_term(t);
  return total;
}

PiPoly evaluate_sum(const ProductExpression& e) { return sum_closed_form(expand_products(e)); }

const char* to_string(IndexMode mode) {
  switch (mode) {
    case IndexMode::all: return "all";
    case IndexMode::even_part: return "even";
    case IndexMode::odd_part: return "odd";
    case IndexMode::alternate_sign: return "alternating";
  }
  return "?";
}

SeriesExpression index_transform(const SeriesExpression& e, IndexMode mode) {
  switch (mode) {
    case IndexMode::all:
      return e;
    case IndexMode::even_part: {
      // n = 2m: c T(beta 2m) / (2m)^p
      SeriesExpression out;
      for (const auto& t : e.terms()) {
        Rational scale = Rational(1) / Rational(BigInt(1) << static_cast<unsigned>(t.p));
        out.add(t.c * scale, t.kind, Rational(2) * t.beta, t.p);
      }
      return out;
    }
    case IndexMode::odd_part:
      return e - index_transform(e, IndexMode::even_part);
    case IndexMode::alternate_sign:
      // (-1)^(n+1) = -cos(pi n)
      return -e.times_trig(TrigKind::cos, Angle::pi_times(1));
  }
  return e;
}

}  // namespace fourierlab
