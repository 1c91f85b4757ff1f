#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
  }
  return Integer(std::string(text.front() == '+' ? text.substr(1) : text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return 1 / power(base, -exponent);
  }
  Rational result = 1;
  Rational factor = base;
  for (auto e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= factor;
    factor *= factor;
  }
  return result;
}

}  // namespace hurwitz
