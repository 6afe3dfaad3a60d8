#pragma once

#include <map>
#include <string>
#include <vector>

#include "fourierlab/angle.hpp"
#include "fourierlab/pipoly.hpp"

namespace fourierlab {

enum class TrigKind { sin, cos };

const char* to_string(TrigKind kind);

/// c * trig(beta * n) / n^p. Constants are cos with beta = 0 and (-1)^n is
/// cos with beta = pi.
struct TrigTerm {
  PiPoly c;
  TrigKind kind = TrigKind::cos;
  Angle beta;
  int p = 0;

  std::string str() const;
};

/// A finite sum of TrigTerms understood as a function of the integer n >= 1.
/// Frequencies are kept in [0, pi] using sin((2pi - b)n) = -sin(bn) and
/// cos((2pi - b)n) = cos(bn), and like terms are combined, so two formulas
/// that are structurally equal denote the same sequence.
class CoefficientFormula {
 public:
  CoefficientFormula() = default;

  /// c / n^p
  static CoefficientFormula constant(const PiPoly& c, int p = 0);
  static CoefficientFormula term(const PiPoly& c, TrigKind kind, const Angle& beta, int p);

  /// Adds c*trig(beta n)/n^p after canonicalizing beta.
  void add(const PiPoly& c, TrigKind kind, const Angle& beta, int p);
  void add(const TrigTerm& t) { add(t.c, t.kind, t.beta, t.p); }

  std::vector<TrigTerm> terms() const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CoefficientFormula operator-() const;
  CoefficientFormula& operator+=(const CoefficientFormula& o);
  CoefficientFormula& operator-=(const CoefficientFormula& o);
  friend CoefficientFormula operator+(CoefficientFormula a, const CoefficientFormula& b) { return a += b; }
  friend CoefficientFormula operator-(CoefficientFormula a, const CoefficientFormula& b) { return a -= b; }
  friend CoefficientFormula operator*(const PiPoly& s, const CoefficientFormula& f);
  /// Product of two formulas, linearized by product-to-sum identities.
  friend CoefficientFormula operator*(const CoefficientFormula& a, const CoefficientFormula& b);
  friend bool operator==(const CoefficientFormula& a, const CoefficientFormula& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplies every term by trig(alpha n).
  CoefficientFormula times_trig(TrigKind kind, const Angle& alpha) const;
  /// Multiplies every term by n^-dp.
  CoefficientFormula shift_power(int dp) const;
  /// Divides every coefficient by pi; throws NotInPiRing if any does not divide.
  CoefficientFormula divide_by_pi() const;

  std::string str() const;

 private:
  struct Key {
    TrigKind kind;
    int p;
    Rational s;
    Rational r;
    friend bool operator<(const Key& a, const Key& b) {
      if (a.kind != b.kind) return a.kind < b.kind;
      if (a.p != b.p) return a.p < b.p;
      if (a.s != b.s) return a.s < b.s;
      return a.r < b.r;
    }
    friend bool operator==(const Key& a, const Key& b) {
      return a.kind == b.kind && a.p == b.p && a.s == b.s && a.r == b.r;
    }
  };
  std::map<Key, PiPoly> terms_;
};

/// Exact product of two single trig terms (without the 1/n^p factors):
/// trig1(a n) * trig2(b n) as a formula with p = 0.
CoefficientFormula trig_product(TrigKind k1, const Angle& a, TrigKind k2, const Angle& b);

}  // namespace fourierlab
