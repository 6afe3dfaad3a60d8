#include "fourierlab/pipoly.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "fourierlab/errors.hpp"

namespace fourierlab {

RationalInterval pi_enclosure(long bits) {
  static std::mutex mutex;
  static std::map<long, RationalInterval> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(bits); it != cache.end()) return it->second;
  }
  mpfr_t lo, hi;
  mpfr_init2(lo, bits);
  mpfr_init2(hi, bits);
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  RationalInterval result;
  mpfr_get_q(result.lo.get_mpq_t(), lo);
  mpfr_get_q(result.hi.get_mpq_t(), hi);
  mpfr_clear(lo);
  mpfr_clear(hi);
  std::lock_guard lock(mutex);
  cache.emplace(bits, result);
  return result;
}

PiPoly::PiPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

PiPoly::PiPoly(long constant) : PiPoly(Rational(constant)) {}

PiPoly::PiPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PiPoly PiPoly::pi() { return PiPoly(std::vector<Rational>{0, 1}); }

PiPoly PiPoly::linear(const Rational& a, const Rational& b) {
  return PiPoly(std::vector<Rational>{a, b});
}

void PiPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (degree() > kMaxDegree)
    throw DegreeOverflow("pi-polynomial degree " + std::to_string(degree()) + " exceeds " +
                         std::to_string(kMaxDegree));
}

Rational PiPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

PiPoly PiPoly::operator-() const {
  PiPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PiPoly& PiPoly::operator+=(const PiPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  int deg = degree() + other.degree();
  if (deg > kMaxDegree)
    throw DegreeOverflow("product degree " + std::to_string(deg) + " exceeds " +
                         std::to_string(kMaxDegree));
  std::vector<Rational> out(static_cast<std::size_t>(deg) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

PiPoly& PiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PiPoly PiPoly::pow(unsigned exponent) const {
  PiPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

PiPoly PiPoly::divide_by_pi() const {
  if (is_zero()) return {};
  if (coeffs_.front() != 0)
    throw NotInPiRing("value " + str() + " is not divisible by pi in Q[pi]");
  return PiPoly(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

RationalInterval PiPoly::enclose(const RationalInterval& pi) const {
  RationalInterval out{0, 0};
  Rational lo_pow = 1, hi_pow = 1;
  for (const auto& c : coeffs_) {
    if (c >= 0) {
      out.lo += c * lo_pow;
      out.hi += c * hi_pow;
    } else {
      out.lo += c * hi_pow;
      out.hi += c * lo_pow;
    }
    lo_pow *= pi.lo;
    hi_pow *= pi.hi;
  }
  return out;
}

Rational approximate(const PiPoly& p, long bits) {
  if (p.is_constant()) return p.coeff(0);
  Rational target(1);
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  for (long prec = bits + 16;; prec *= 2) {
    RationalInterval iv = p.enclose(pi_enclosure(prec));
    if (iv.hi - iv.lo < target) return (iv.lo + iv.hi) / 2;
  }
}

double PiPoly::approx() const { return approximate(*this, 64).get_d(); }

std::string PiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << "pi";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PiPoly& p) { return os << p.str(); }

Sign exact_sign(const PiPoly& p) {
  if (p.is_constant()) {
    int s = sgn(p.coeff(0));
    return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
  }
  for (long bits = 64;; bits *= 2) {
    RationalInterval iv = p.enclose(pi_enclosure(bits));
    if (iv.lo > 0) return Sign::positive;
    if (iv.hi < 0) return Sign::negative;
  }
}

int compare(const PiPoly& a, const PiPoly& b) { return static_cast<int>(exact_sign(a - b)); }

DecimalApprox to_decimal(const PiPoly& p, int digits) {
  if (digits < 1) throw InvalidArgument("to_decimal requires digits >= 1");
  if (p.is_constant()) {
    Rational value = p.coeff(0);
    std::string text = format_fixed(value, digits);
    return {text, abs(parse_rational(text) - value)};
  }
  for (long bits = static_cast<long>(digits * 3.33) + 32;; bits *= 2) {
    RationalInterval iv = p.enclose(pi_enclosure(bits));
    std::string lo = format_fixed(iv.lo, digits);
    if (lo != format_fixed(iv.hi, digits)) continue;
    Rational rounded = parse_rational(lo);
    return {lo, std::max(abs(rounded - iv.lo), abs(rounded - iv.hi))};
  }
}

}  // namespace fourierlab
