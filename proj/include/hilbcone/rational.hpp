#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace hilbcone {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Canonical "p/q" text (q > 0, gcd 1), or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

/// Converts an integral rational to long long; throws if not integral or out
/// of range.
long long to_int64(const Rational& q);

/// Fixed-point rendering with `places` digits after the point, rounding half
/// away from zero. Pure integer arithmetic.
std::string to_decimal(const Rational& q, int places);

int sign(const Rational& q);

Integer binomial(long long n, long long k);

}  // namespace hilbcone
