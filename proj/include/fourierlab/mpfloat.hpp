#pragma once

#include <mpfr.h>

#include <string>

#include "fourierlab/pipoly.hpp"
#include "fourierlab/rational.hpp"

namespace fourierlab {

/// Owning wrapper around an mpfr_t.
class MpFloat {
 public:
  explicit MpFloat(long precision_bits);
  MpFloat(const MpFloat& other);
  MpFloat(MpFloat&& other) noexcept;
  MpFloat& operator=(const MpFloat& other);
  MpFloat& operator=(MpFloat&& other) noexcept;
  ~MpFloat();

  static MpFloat from(const Rational& q, long precision_bits);
  /// Value of p(pi), accurate to the working precision.
  static MpFloat from(const PiPoly& p, long precision_bits);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  Rational to_rational() const;
  /// Fixed-point text with `digits` fractional digits.
  std::string to_fixed(int digits) const;

 private:
  mpfr_t value_;
};

/// Bits needed for `digits` decimal digits plus `guard_bits`.
inline long bits_for_digits(int digits, long guard_bits = 32) {
  return static_cast<long>(digits * 3.3219280948873623) + guard_bits;
}

}  // namespace fourierlab
