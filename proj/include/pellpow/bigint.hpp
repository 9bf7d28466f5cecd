#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pellpow {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses an exact decimal such as "2.77e87", "4.9e28", "1.94" or "-0.25" into
/// a canonical rational. No binary rounding is involved.
Rational parse_decimal(std::string_view text);

/// Parses a decimal that must denote an integer ("5.9e30" is accepted,
/// "1.5" is not).
BigInt parse_decimal_integer(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Number of decimal digits of |v| (1 for zero).
std::size_t decimal_digits(const BigInt& v);

}  // namespace pellpow
