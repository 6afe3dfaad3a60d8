#include "fourierlab/trig_series.hpp"

#include <sstream>

#include "fourierlab/errors.hpp"

namespace fourierlab {

const char* to_string(TrigKind kind) { return kind == TrigKind::sin ? "sin" : "cos"; }

namespace {

std::string frequency_text(const Angle& beta) {
  if (beta == Angle(1)) return "n";
  if (beta.s == 0) return to_string(beta.r) + "*n";
  if (beta.r == 0) {
    if (beta.s == 1) return "pi*n";
    return to_string(beta.s) + "*pi*n";
  }
  return "(" + beta.str() + ")*n";
}

}  // namespace

std::string TrigTerm::str() const {
  std::ostringstream os;
  os << "(" << c.str() << ")";
  if (!(kind == TrigKind::cos && beta.is_zero())) os << "*" << to_string(kind) << "(" << frequency_text(beta) << ")";
  if (p == 1) os << "/n";
  if (p > 1) os << "/n^" << p;
  return os.str();
}

CoefficientFormula CoefficientFormula::constant(const PiPoly& c, int p) {
  CoefficientFormula f;
  f.add(c, TrigKind::cos, Angle(0), p);
  return f;
}

CoefficientFormula CoefficientFormula::term(const PiPoly& c, TrigKind kind, const Angle& beta, int p) {
  CoefficientFormula f;
  f.add(c, kind, beta, p);
  return f;
}

void CoefficientFormula::add(const PiPoly& c, TrigKind kind, const Angle& beta, int p) {
  if (c.is_zero()) return;
  Angle b = reduce_mod_2pi(beta).reduced;
  PiPoly coef = c;
  const Angle pi = Angle::pi_times(1);
  if (compare(b, pi) > 0) {
    b = Angle::pi_times(2) - b;
    if (kind == TrigKind::sin) coef = -coef;
  }
  if (kind == TrigKind::sin && (b.is_zero() || b == pi)) return;
  Key key{kind, p, b.s, b.r};
  auto [it, inserted] = terms_.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<TrigTerm> CoefficientFormula::terms() const {
  std::vector<TrigTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back(TrigTerm{c, key.kind, Angle(key.r, key.s), key.p});
  return out;
}

CoefficientFormula CoefficientFormula::operator-() const {
  CoefficientFormula f = *this;
  for (auto& [key, c] : f.terms_) c = -c;
  return f;
}

CoefficientFormula& CoefficientFormula::operator+=(const CoefficientFormula& o) {
  for (const auto& [key, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

CoefficientFormula& CoefficientFormula::operator-=(const CoefficientFormula& o) { return *this += -o; }

CoefficientFormula operator*(const PiPoly& s, const CoefficientFormula& f) {
  CoefficientFormula out;
  if (s.is_zero()) return out;
  for (const auto& [key, c] : f.terms_) out.terms_.emplace(key, s * c);
  return out;
}

CoefficientFormula trig_product(TrigKind k1, const Angle& a, TrigKind k2, const Angle& b) {
  CoefficientFormula out;
  const Rational half(1, 2);
  if (k1 == TrigKind::cos && k2 == TrigKind::cos) {
    out.add(half, TrigKind::cos, a - b, 0);
    out.add(half, TrigKind::cos, a + b, 0);
  } else if (k1 == TrigKind::sin && k2 == TrigKind::sin) {
    out.add(half, TrigKind::cos, a - b, 0);
    out.add(Rational(-half), TrigKind::cos, a + b, 0);
  } else if (k1 == TrigKind::sin) {
    out.add(half, TrigKind::sin, a + b, 0);
    out.add(half, TrigKind::sin, a - b, 0);
  } else {
    out.add(half, TrigKind::sin, a + b, 0);
    out.add(Rational(-half), TrigKind::sin, a - b, 0);
  }
  return out;
}

CoefficientFormula operator*(const CoefficientFormula& a, const CoefficientFormula& b) {
  CoefficientFormula out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      CoefficientFormula prod =
          trig_product(ka.kind, Angle(ka.r, ka.s), kb.kind, Angle(kb.r, kb.s)).shift_power(ka.p + kb.p);
      out += (ca * cb) * prod;
    }
  }
  return out;
}

CoefficientFormula CoefficientFormula::times_trig(TrigKind kind, const Angle& alpha) const {
  CoefficientFormula out;
  for (const auto& [key, c] : terms_)
    out += c * trig_product(key.kind, Angle(key.r, key.s), kind, alpha).shift_power(key.p);
  return out;
}

CoefficientFormula CoefficientFormula::shift_power(int dp) const {
  CoefficientFormula out;
  for (const auto& [key, c] : terms_) {
    Key k = key;
    k.p += dp;
    if (k.p < 0) throw InvalidArgument("negative power of n in a coefficient formula");
    out.terms_.emplace(k, c);
  }
  return out;
}

CoefficientFormula CoefficientFormula::divide_by_pi() const {
  CoefficientFormula out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, c.divide_by_pi());
  return out;
}

std::string CoefficientFormula::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms()) {
    if (!out.empty()) out += " + ";
    out += t.str();
  }
  return out;
}

}  // namespace fourierlab
