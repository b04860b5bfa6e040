#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ajack {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Canonical "num/den" text; the denominator is always written, so 3 prints as "3/1".
std::string to_string(const Rational& r);

/// Accepts "a/b" or a bare integer "a". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);
double to_double(const Rational& r);

/// Numerator of an integral rational as a long; throws std::overflow_error if it does not fit
/// or std::domain_error if r is not an integer.
long to_long(const Rational& r);

long lcm(long a, long b);
long gcd(long a, long b);

}  // namespace ajack
