#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace easyq {

/// Arbitrary-precision rational, always kept in canonical reduced form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(Rational const& value);

/// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
Rational parse_rational(std::string_view text);

Rational power(Rational const& base, long exponent);
Integer power(Integer const& base, unsigned long exponent);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

double to_double(Rational const& value);

}  // namespace easyq
