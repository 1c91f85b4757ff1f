#include <doctest.h>

#include "hurwitz/character.hpp"
#include "hurwitz/recursion.hpp"

using namespace hurwitz;

TEST_CASE("closed form") {
  CHECK(h0_closed(1) == 1);
  CHECK(h0_closed(2) == Rational(1, 2));
  CHECK(h0_closed(3) == 4);
  CHECK(h0_closed(4) == 120);
  CHECK(h0_closed(5) == 8400);
  CHECK_THROWS_AS(h0_closed(0), std::invalid_argument);
}

TEST_CASE("genus 0 recursion") {
  CHECK(h0_recursion(1) == 1);
  CHECK(h0_recursion(2) == Rational(1, 2));
  CHECK(h0_recursion(3) == 4);
  CHECK(h0_recursion(4) == 120);
  for (int d = 1; d <= 12; ++d) CHECK(h0_recursion(d) == h0_closed(d));
}

TEST_CASE("genus 1 recursion") {
  CHECK(h1_recursion(1) == 0);
  CHECK(h1_recursion(2) == Rational(1, 2));
  CHECK(h1_recursion(3) == 40);
}

TEST_CASE("genus 2 recursion") {
  CHECK(h2_recursion(1) == 0);
  CHECK(h2_recursion(2) == Rational(1, 2));
  CHECK(h2_recursion(3) == 364);
  // The two summands at d = 3 from hand evaluation.
  CHECK(h2_recursion(3) == Rational(5895, 17) + Rational(293, 17));
}

TEST_CASE("recursions agree with the character method") {
  const auto h1 = h1_recursion_sequence(6);
  const auto h2 = h2_recursion_sequence(6);
  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(h1[static_cast<std::size_t>(d)] == connected_hurwitz(1, d));
    CHECK(h2[static_cast<std::size_t>(d)] == connected_hurwitz(2, d));
  }
}

TEST_CASE("recursion outputs are nonnegative") {
  const auto h0 = h0_recursion_sequence(10);
  const auto h1 = h1_recursion_sequence(10);
  const auto h2 = h2_recursion_sequence(10);
  for (int d = 1; d <= 10; ++d) {
    const auto i = static_cast<std::size_t>(d);
    CHECK(h0[i] > 0);
    CHECK(h1[i] >= 0);
    CHECK(h2[i] >= 0);
  }
}
