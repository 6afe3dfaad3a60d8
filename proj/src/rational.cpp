#include "fourierlab/rational.hpp"

#include <cctype>

#include "fourierlab/errors.hpp"

namespace fourierlab {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view original) {
  if (digits.empty()) throw InvalidArgument("malformed number '" + std::string(original) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw InvalidArgument("malformed number '" + std::string(original) + "'");
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    value = make_rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      exponent = parse_integer(exp_part, text).get_si();
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
      fraction_digits = static_cast<long>(s.size() - dot - 1);
    } else {
      digits = std::string(s);
    }
    value = Rational(parse_integer(digits, text)) * pow10(exponent - fraction_digits);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

BigInt floor(const Rational& q) {
  BigInt result;
  mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return result;
}

BigInt round_nearest(const Rational& q) {
  Rational half(1, 2);
  if (q >= 0) return floor(q + half);
  return -floor(-q + half);
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow10(long exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  Rational r(BigInt(1), p);
  r.canonicalize();
  return r;
}

Rational binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

std::string format_fixed(const Rational& q, int digits) {
  BigInt scaled = round_nearest(q * pow10(digits));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body = scaled.get_str(10);
  if (digits > 0) {
    if (body.size() < static_cast<std::size_t>(digits) + 1)
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

}  // namespace fourierlab
