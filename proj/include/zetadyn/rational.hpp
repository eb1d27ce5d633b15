#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zetadyn {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

/// Inverse of to_string(Rational); accepts "p" and "p/q".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

BigInt ipow(const BigInt& base, unsigned long exponent);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational rpow(const Rational& base, long exponent);

/// Natural logarithm of a positive big integer, in double precision.
double log_of(const BigInt& n);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(double value, int significant_digits = 12);

} // namespace zetadyn
