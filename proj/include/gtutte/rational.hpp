#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gtutte {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational scalar. GMP keeps every value canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;

/// num/den in lowest terms. Throws DivisionByZero for den = 0.
Rational ratio(long num, long den);

/// Parses "p", "p/q" or "-p/q". Throws Error(ParseError) on malformed input
/// and Error(DivisionByZero) for a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// base^exponent; negative exponents invert and throw DivisionByZero on 0.
Rational power(const Rational& base, long exponent);
Integer power(const Integer& base, unsigned long exponent);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace gtutte
