#include <doctest.h>

#include <algorithm>
#include <random>

#include "hurwitz/intersection.hpp"
#include "hurwitz/recursion.hpp"

using namespace hurwitz;

TEST_CASE("genus-0 psi integrals") {
  CHECK(psi_integral_genus0(PsiExponentVector({0, 0, 0})) == 1);
  CHECK(psi_integral_genus0(PsiExponentVector({1, 0, 0, 0})) == 1);
  CHECK(psi_integral_genus0(PsiExponentVector({2, 0, 0, 0})) == 0);
  CHECK(psi_integral_genus0(PsiExponentVector({1, 1, 0, 0, 0})) == 2);
  CHECK(psi_integral_genus0(PsiExponentVector({2, 1, 0, 0, 0, 0})) == 3);
  CHECK_THROWS_AS(PsiExponentVector({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PsiExponentVector({-1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("psi integrals are symmetric") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (int unit = 0; unit < n - 3; ++unit) ++a[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng))];
    const Integer value = psi_integral_genus0(PsiExponentVector(a));
    std::shuffle(a.begin(), a.end(), rng);
    CHECK(psi_integral_genus0(PsiExponentVector(a)) == value);
  }
}

TEST_CASE("compositions") {
  int count = 0;
  for_each_composition(2, 3, [&](std::span<const int> parts) {
    CHECK(parts.size() == 3);
    CHECK(parts[0] + parts[1] + parts[2] == 2);
    ++count;
  });
  CHECK(count == 6);
  count = 0;
  for_each_composition(0, 4, [&](std::span<const int>) { ++count; });
  CHECK(count == 1);
}

TEST_CASE("multinomial theorem: summed multinomials give n^k") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= 6; ++k) {
      Integer sum = 0;
      long count = 0;
      for_each_composition(k, n, [&](std::span<const int> parts) {
        Integer term = factorial(k);
        for (int e : parts) term /= factorial(e);
        sum += term;
        ++count;
      });
      CHECK(count == binomial(n + k - 1, k));
      CHECK(sum == boost::multiprecision::pow(Integer(n), static_cast<unsigned>(k)));
    }
  }
}

TEST_CASE("genus-0 Hodge-integral formula") {
  CHECK(elsv_genus0(3) == 4);
  CHECK(elsv_genus0(4) == 120);
  for (int d = 3; d <= 8; ++d) CHECK(elsv_genus0(d) == h0_closed(d));
  CHECK_THROWS_AS(elsv_genus0(1), DegenerateCase);
  CHECK_THROWS_WITH_AS(elsv_genus0(2), "degenerate case", DegenerateCase);
  CHECK_THROWS_AS(elsv_genus0(0), std::invalid_argument);
}
