#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fourierlab {

// Arithmetic on mpq_class keeps values canonical (reduced, positive
// denominator). The two-argument constructor does not: build fractions from
// runtime integers with make_rational.
using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form. Throws InvalidArgument when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "p/q", or a plain decimal such as "-0.125" or "1.5e-3" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

BigInt floor(const Rational& q);
BigInt round_nearest(const Rational& q);  // ties away from zero
Rational abs(const Rational& q);
Rational pow10(long exponent);
Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

/// Formats q rounded to `digits` fractional decimal digits (ties away from zero).
std::string format_fixed(const Rational& q, int digits);

}  // namespace fourierlab
