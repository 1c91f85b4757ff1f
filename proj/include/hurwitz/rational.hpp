#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hurwitz {

/// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "a/b" in lowest terms, or a bare integer when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Inverse of to_string. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

Integer factorial(long n);

/// C(n, k), zero whenever k < 0 or k > n.
Integer binomial(long n, long k);

/// base^exponent for any integer exponent; throws std::domain_error for
/// 0 raised to a negative power.
Rational power(const Rational& base, long exponent);

}  // namespace hurwitz
