#include "hurwitz/recursion.hpp"

#include <stdexcept>

namespace hurwitz {

namespace {

// Coefficients of the genus-2 recursion.
const Rational kG2LeadingCubic(97, 136);
const Rational kG2LeadingSquare(20, 17);
const Rational kG2MixedSlope(115, 17);
const Rational kG2EllipticCross(11697, 34);
const Rational kG2EllipticSquare(3899, 68);

void require_degree(int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
}

Rational choose(long n, long k) { return Rational(binomial(n, k)); }

}  // namespace

Rational h0_closed(int d) {
  require_degree(d);
  return Rational(factorial(2 * d - 2), factorial(d)) * power(Rational(d), d - 3);
}

std::vector<Rational> h0_recursion_sequence(int d_max) {
  require_degree(d_max);
  std::vector<Rational> h0(static_cast<std::size_t>(d_max) + 1);
  h0[1] = 1;
  for (int d = 2; d <= d_max; ++d) {
    Rational sum = 0;
    for (int i = 1; i <= d - 1; ++i) {
      const long j = d - i;
      sum += choose(2 * d - 4, 2 * i - 2) * Rational(long(i) * i * j * j) * h0[i] * h0[j];
    }
    h0[d] = Rational(2 * d - 3, d) * sum;
  }
  return h0;
}

std::vector<Rational> h1_recursion_sequence(int d_max) {
  const std::vector<Rational> h0 = h0_recursion_sequence(d_max);
  std::vector<Rational> h1(static_cast<std::size_t>(d_max) + 1);
  for (int d = 1; d <= d_max; ++d) {
    Rational value = Rational(d, 6) * choose(d, 2) * Rational(2 * d - 1) * h0[d];
    for (int i = 1; i <= d - 1; ++i) {
      const long j = d - i;
      value += choose(2 * d - 2, 2 * i - 2) * Rational((4L * d - 2) * i * i * j) * h0[i] * h1[j];
    }
    h1[d] = value;
  }
  return h1;
}

std::vector<Rational> h2_recursion_sequence(int d_max) {
  const std::vector<Rational> h0 = h0_recursion_sequence(d_max);
  const std::vector<Rational> h1 = h1_recursion_sequence(d_max);
  std::vector<Rational> h2(static_cast<std::size_t>(d_max) + 1);
  for (int d = 1; d <= d_max; ++d) {
    const Rational deg(d);
    Rational value = deg * deg * (kG2LeadingCubic * deg - kG2LeadingSquare) * h1[d];
    for (int i = 1; i <= d - 1; ++i) {
      const long j = d - i;
      const Rational ij(long(i) * j);
      value += choose(2 * d, 2 * i - 2) * (Rational(8 * d) - kG2MixedSlope * i) * ij * h0[i] * h2[j];
      value += choose(2 * d, 2 * i) * (kG2EllipticCross * ij - kG2EllipticSquare * deg * deg) * ij * h1[i] * h1[j];
    }
    h2[d] = value;
  }
  return h2;
}

Rational h0_recursion(int d) { return h0_recursion_sequence(d).back(); }
Rational h1_recursion(int d) { return h1_recursion_sequence(d).back(); }
Rational h2_recursion(int d) { return h2_recursion_sequence(d).back(); }

}  // namespace hurwitz
