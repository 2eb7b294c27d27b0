#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyspace {

using Integer = mpz_class;

/// Exact rational scalar. gmpxx keeps values canonical (reduced, positive
/// denominator) as long as every construction from raw parts goes through
/// make_rational or parse_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p" or "p/q" with optional leading sign; no decimals, no spaces
/// inside the literal. Throws Error{Parse}.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& value);

std::string format_integer(const Integer& value);

int sign(const Rational& value);

/// Exact value as an Integer; throws Error{ParityViolation} if the value is
/// not integral.
Integer to_integer_exact(const Rational& value, const char* context);

}  // namespace polyspace
