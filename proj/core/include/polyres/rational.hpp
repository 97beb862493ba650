#pragma once

#include <gmpxx.h>

#include <string>

namespace polyres {

// Exact arbitrary-precision arithmetic. The pipeline divides by factorials
// up to (sum r_i k_i)! and relies on exact zero tests, so coefficients are
// never floating point.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);

/// Canonicalized fraction. The raw two-argument mpq_class constructor does
/// not reduce, which silently breaks equality tests; use this instead
/// whenever numerator and denominator may share a factor.
Rational frac(long num, long den);

/// Parses "p" or "p/q" with an optional leading sign. Throws InputError on
/// malformed text or a zero denominator. The result is canonicalized.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

} // namespace polyres
