#include "fourierlab/angle.hpp"

namespace fourierlab {

std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << a.str(); }

ReducedAngle reduce_mod_2pi(const Angle& theta) {
  BigInt turns;
  if (theta.r == 0) {
    // theta / (2 pi) = s / 2 is rational.
    turns = floor(theta.s / 2);
  } else {
    // theta / (2 pi) = r / (2 pi) + s / 2 is irrational, so the enclosure
    // eventually lies strictly between two integers.
    for (long bits = 64;; bits *= 2) {
      RationalInterval pi = pi_enclosure(bits);
      Rational a = theta.r / (2 * pi.hi) + theta.s / 2;
      Rational b = theta.r / (2 * pi.lo) + theta.s / 2;
      BigInt fa = floor(a < b ? a : b);
      BigInt fb = floor(a < b ? b : a);
      if (fa == fb) {
        turns = fa;
        break;
      }
    }
  }
  Angle reduced(theta.r, theta.s - 2 * Rational(turns));
  return {reduced, turns, reduced.is_zero()};
}

}  // namespace fourierlab
