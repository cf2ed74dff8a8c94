/// @file rational.hpp
/// @brief Exact rational scalars (GMP-backed) plus parsing/formatting helpers.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace skewrank {

/// All coefficients in the library are exact rationals.  Values are kept
/// canonical (gcd 1, positive denominator); construction sites that bypass
/// GMP's canonicalization must call canonicalize() themselves.
using Rational = mpq_class;

/// Parse "p" or "p/q" with optional leading '-'.  Throws parse_error on
/// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

/// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

/// Exact square root when `value` is a square of a rational, std::nullopt
/// otherwise.  Used by the secant splitter's degree-2 minimal polynomial.
std::optional<Rational> rational_sqrt(const Rational& value);

/// Binomial coefficient as a plain integer; n is small (ambient dimensions).
long long binomial(int n, int k);

} // namespace skewrank
