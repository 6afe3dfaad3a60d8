#pragma once

#include <ostream>
#include <string>

#include "fourierlab/pipoly.hpp"
#include "fourierlab/rational.hpp"

namespace fourierlab {

/// An element r + s*pi of Q + Q*pi. Used for breakpoints, frequencies and
/// evaluation points.
struct Angle {
  Rational r;  // rational part
  Rational s;  // coefficient of pi

  Angle() = default;
  Angle(Rational rational_part, Rational pi_part = 0)  // NOLINT(google-explicit-constructor)
      : r(std::move(rational_part)), s(std::move(pi_part)) {}
  Angle(long rational_part) : r(rational_part), s(0) {}  // NOLINT(google-explicit-constructor)

  static Angle pi_times(const Rational& s) { return Angle(Rational(0), s); }

  PiPoly to_pipoly() const { return PiPoly::linear(r, s); }
  bool is_zero() const { return r == 0 && s == 0; }

  Angle operator-() const { return Angle(-r, -s); }
  Angle& operator+=(const Angle& o) {
    r += o.r;
    s += o.s;
    return *this;
  }
  Angle& operator-=(const Angle& o) {
    r -= o.r;
    s -= o.s;
    return *this;
  }
  friend Angle operator+(Angle a, const Angle& b) { return a += b; }
  friend Angle operator-(Angle a, const Angle& b) { return a -= b; }
  friend Angle operator*(const Rational& k, const Angle& a) { return Angle(k * a.r, k * a.s); }
  friend Angle operator*(const Angle& a, const Rational& k) { return k * a; }
  friend bool operator==(const Angle& a, const Angle& b) { return a.r == b.r && a.s == b.s; }

  double approx() const { return to_pipoly().approx(); }
  std::string str() const { return to_pipoly().str(); }
};

std::ostream& operator<<(std::ostream& os, const Angle& a);

/// Real-number ordering of angles.
inline int compare(const Angle& a, const Angle& b) { return compare(a.to_pipoly(), b.to_pipoly()); }
inline Sign exact_sign(const Angle& a) { return exact_sign(a.to_pipoly()); }

/// Structural total order (by pi part, then rational part); used for map keys.
struct AngleStructuralLess {
  bool operator()(const Angle& a, const Angle& b) const {
    if (a.s != b.s) return a.s < b.s;
    return a.r < b.r;
  }
};

struct ReducedAngle {
  Angle reduced;   // in [0, 2*pi)
  BigInt turns;    // original == reduced + 2*pi*turns
  bool boundary;   // reduced == 0 exactly
};

/// Reduces theta into [0, 2*pi).
ReducedAngle reduce_mod_2pi(const Angle& theta);

}  // namespace fourierlab
