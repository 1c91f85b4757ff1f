#include <doctest.h>

#include "hurwitz/character.hpp"
#include "hurwitz/oracle.hpp"
#include "support/brute_force.hpp"

using namespace hurwitz;

TEST_CASE("factorization counts") {
  CHECK(factorization_count(2, 2) == 1);
  CHECK(factorization_count(3, 3) == 0);
  CHECK(factorization_count(3, 4) == 27);
  CHECK(factorization_count(1, 0) == 1);
  CHECK(factorization_count(1, 3) == 0);
  CHECK(factorization_count(4, 0) == 1);
  CHECK_THROWS_AS(factorization_count(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(factorization_count(2, -1), std::invalid_argument);
}

TEST_CASE("character sum matches naive tuple enumeration") {
  for (int d = 1; d <= 4; ++d) {
    for (int r = 0; r <= 6; ++r) {
      CAPTURE(d);
      CAPTURE(r);
      CHECK(factorization_count(d, r) == testing::count_identity_products(d, r));
    }
  }
}

TEST_CASE("odd numbers of transpositions never multiply to the identity") {
  for (int d = 1; d <= 8; ++d) {
    for (int r = 1; r <= 15; r += 2) CHECK(factorization_count(d, r) == 0);
  }
}

TEST_CASE("disconnected Hurwitz numbers") {
  CHECK(disconnected_hurwitz(2, 2) == Rational(1, 2));
  CHECK(disconnected_hurwitz(3, 4) == Rational(9, 2));
  CHECK(disconnected_hurwitz(3, 0) == Rational(1, 6));
}

TEST_CASE("connected Hurwitz numbers") {
  CHECK(connected_hurwitz(0, 1) == 1);
  CHECK(connected_hurwitz(0, 2) == Rational(1, 2));
  CHECK(connected_hurwitz(1, 2) == Rational(1, 2));
  CHECK(connected_hurwitz(0, 3) == 4);
  // h°(3,4) - h(2,4) h(1,0)
  CHECK(connected_hurwitz(0, 3) == disconnected_hurwitz(3, 4) - connected_hurwitz(1, 2) * connected_hurwitz(0, 1));
  for (int g = 1; g <= 6; ++g) CHECK(connected_hurwitz(g, 1) == 0);
  CHECK_THROWS_AS(connected_hurwitz(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(connected_hurwitz(0, 0), std::invalid_argument);
}

TEST_CASE("connected counts never exceed disconnected counts") {
  for (int g = 0; g <= 3; ++g) {
    for (int d = 1; d <= 6; ++d) {
      const int r = branch_point_count(g, d);
      const Rational connected = connected_hurwitz(g, d);
      CHECK(connected >= 0);
      CHECK(disconnected_hurwitz(d, r) >= connected);
    }
  }
}

TEST_CASE("oracle small cases") {
  CHECK(oracle_connected(0, 1) == 1);
  CHECK(oracle_connected(1, 1) == 0);
  CHECK(oracle_connected(2, 2) == Rational(1, 2));
  CHECK(oracle_connected(0, 3) == 4);
  CHECK(oracle_transitive_count(2, 6) == 1);
}

TEST_CASE("oracle refuses runaway enumeration") {
  CHECK(oracle_within_bound(2, 4));
  CHECK_FALSE(oracle_within_bound(0, 6));
  CHECK(oracle_within_bound(3, 3));
  CHECK_FALSE(oracle_within_bound(5, 2));
  CHECK_THROWS_AS(oracle_connected(0, 6), std::out_of_range);
  CHECK_THROWS_AS(oracle_connected(3, 4), std::out_of_range);
  CHECK_THROWS_AS(oracle_transitive_count(3, 11), std::out_of_range);
}

TEST_CASE("oracle agrees with the character method") {
  for (int d = 1; d <= 4; ++d) {
    for (int g = 0; branch_point_count(g, d) <= 8; ++g) {
      CAPTURE(g);
      CAPTURE(d);
      CHECK(connected_hurwitz(g, d) == oracle_connected(g, d));
    }
  }
}
