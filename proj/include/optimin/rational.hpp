#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace optimin {

/// Exact rational number. GMP keeps mpq values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws on a zero denominator.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "7", "-3", "1/4" or a terminating decimal such as "0.9".
Rational parse_rational(std::string_view text);

/// "a/b", or "a" for integers.
std::string to_string(const Rational& r);

/// Decimal rendering truncated toward zero, e.g. 265/6 -> "44.166".
std::string to_decimal(const Rational& r, int places = 3);

bool is_integer(const Rational& r);

std::string join(const std::vector<Rational>& values, std::string_view sep = ",");

}  // namespace optimin
