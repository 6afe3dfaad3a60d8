#include "fourierlab/mpfloat.hpp"

#include <utility>

namespace fourierlab {

MpFloat::MpFloat(long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

MpFloat::MpFloat(const MpFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpFloat::MpFloat(MpFloat&& other) noexcept {
  // mpfr_t is an array type; moving swaps the limb pointers and leaves
  // `other` owning a fresh minimal value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

MpFloat& MpFloat::operator=(const MpFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpFloat& MpFloat::operator=(MpFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

MpFloat::~MpFloat() { mpfr_clear(value_); }

MpFloat MpFloat::from(const Rational& q, long precision_bits) {
  MpFloat out(precision_bits);
  mpfr_set_q(out.value_, q.get_mpq_t(), MPFR_RNDN);
  return out;
}

MpFloat MpFloat::from(const PiPoly& p, long precision_bits) {
  return from(approximate(p, precision_bits + 8), precision_bits);
}

Rational MpFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string MpFloat::to_fixed(int digits) const { return format_fixed(to_rational(), digits); }

}  // namespace fourierlab
