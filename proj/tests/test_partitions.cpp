#include <doctest.h>

#include <set>

#include "hurwitz/partitions.hpp"
#include "support/brute_force.hpp"

using namespace hurwitz;

TEST_CASE("enumerate small degrees") {
  const auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  CHECK(zero[0].size() == 0);

  const auto one = enumerate_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Partition({1}));

  const std::vector<Partition> four{Partition({4}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1}),
                                    Partition({1, 1, 1, 1})};
  CHECK(enumerate_partitions(4) == four);
}

TEST_CASE("partition counts follow the pentagonal recurrence") {
  const auto p = testing::partition_numbers(30);
  CHECK(p[30] == 5604);
  for (int d = 0; d <= 30; ++d) {
    const auto all = enumerate_partitions(d);
    CHECK(static_cast<long long>(all.size()) == p[static_cast<std::size_t>(d)]);
    std::set<std::vector<int>> distinct;
    for (const auto& lambda : all) {
      CHECK(lambda.size() == d);
      distinct.emplace(lambda.parts().begin(), lambda.parts().end());
    }
    CHECK(distinct.size() == all.size());
    // Reverse-lexicographic: each successor compares strictly smaller.
    for (std::size_t i = 1; i < all.size(); ++i) {
      CHECK(std::lexicographical_compare(all[i].parts().begin(), all[i].parts().end(), all[i - 1].parts().begin(),
                                         all[i - 1].parts().end()));
    }
  }
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
  CHECK(Partition::from_unordered({1, 3, 2}) == Partition({3, 2, 1}));
}

TEST_CASE("irrep dimensions") {
  CHECK(irrep_dimension(Partition({5})) == 1);
  CHECK(irrep_dimension(Partition({1, 1, 1, 1, 1})) == 1);
  CHECK(irrep_dimension(Partition({2, 1})) == 2);
  CHECK(irrep_dimension(Partition({3, 2})) == 5);
  CHECK(irrep_dimension(Partition()) == 1);
}

TEST_CASE("Burnside: sum of squared dimensions is d!") {
  for (int d = 0; d <= 12; ++d) {
    Integer total = 0;
    for (const auto& lambda : enumerate_partitions(d)) total += irrep_dimension(lambda) * irrep_dimension(lambda);
    CHECK(total == factorial(d));
  }
}

TEST_CASE("content sums") {
  CHECK(content_sum(Partition({2, 1})) == 0);
  CHECK(content_sum(Partition({3})) == 3);
  CHECK(content_sum(Partition({1, 1, 1})) == -3);
  CHECK(content_sum(Partition()) == 0);
}

TEST_CASE("conjugation negates the content sum and is an involution") {
  for (int d = 0; d <= 14; ++d) {
    for (const auto& lambda : enumerate_partitions(d)) {
      const Partition dual = lambda.conjugate();
      CHECK(content_sum(lambda) + content_sum(dual) == 0);
      CHECK(dual.conjugate() == lambda);
      CHECK(irrep_dimension(dual) == irrep_dimension(lambda));
    }
  }
}
