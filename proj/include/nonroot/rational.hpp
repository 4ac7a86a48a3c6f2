#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nonroot {

/// Exact rational scalar, always kept in canonical (reduced, positive
/// denominator) form.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

Rational floor(const Rational& value);

/// value - floor(value), in [0, 1).
Rational frac(const Rational& value);

Rational abs(const Rational& value);

/// Largest power of two 2^-m (m >= min_exponent) not exceeding bound > 0.
Rational dyadic_floor(const Rational& bound, unsigned min_exponent = 0);

double to_double(const Rational& value);

}  // namespace nonroot
