#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kminor {

/// Exact rational in canonical form (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Accepts "p", "p/q", and plain decimals such as "-1.25" or "3e-2".
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Fixed-point rendering with `digits` decimals, rounded half away from zero.
std::string to_decimal(const Rational& value, int digits = 6);

/// Exact: every finite double is a dyadic rational.
Rational from_double(double value);
double to_double(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
bool is_integer(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& value);

Rational sum(const std::vector<Rational>& values);

}  // namespace kminor
