#include <doctest.h>

#include "hurwitz/table.hpp"

using namespace hurwitz;

TEST_CASE("method names") {
  for (Method m : kAllMethods) CHECK(parse_method(to_string(m)) == m);
  CHECK_FALSE(parse_method("closed_form").has_value());
}

TEST_CASE("closed-form table") {
  const HurwitzTable t = build_table(0, 3, Method::closed_form);
  CHECK(t.size() == 3);
  CHECK(*t.find(0, 1, Method::closed_form) == 1);
  CHECK(*t.find(0, 2, Method::closed_form) == Rational(1, 2));
  CHECK(*t.find(0, 3, Method::closed_form) == 4);
  CHECK(t.find(0, 3, Method::character) == nullptr);
}

TEST_CASE("recursion tables") {
  const HurwitzTable t = build_table(1, 2, Method::recursion);
  CHECK(t.size() == 4);
  CHECK(*t.find(1, 1, Method::recursion) == 0);
  CHECK(*t.find(1, 2, Method::recursion) == Rational(1, 2));
  const HurwitzTable t2 = build_table(2, 1, Method::recursion);
  CHECK(*t2.find(2, 1, Method::recursion) == 0);
  CHECK_THROWS_AS(build_table(3, 2, Method::recursion), std::invalid_argument);
}

TEST_CASE("inapplicable methods") {
  CHECK_THROWS_AS(build_table(1, 3, Method::closed_form), std::invalid_argument);
  CHECK_THROWS_AS(build_table(0, 6, Method::oracle), std::invalid_argument);
  CHECK_THROWS_AS(build_table(0, 0, Method::character), std::invalid_argument);
  CHECK(inapplicable_reason(Method::elsv_g0, 1, 3).has_value());
  CHECK_FALSE(inapplicable_reason(Method::character, 7, 1).has_value());
}

TEST_CASE("elsv-g0 routes degenerate degrees to stored values") {
  CHECK(compute_hurwitz(Method::elsv_g0, 0, 1) == 1);
  CHECK(compute_hurwitz(Method::elsv_g0, 0, 2) == Rational(1, 2));
  CHECK(compute_hurwitz(Method::elsv_g0, 0, 5) == 8400);
}

TEST_CASE("all methods agree wherever two apply") {
  HurwitzTable merged;
  for (Method m : kAllMethods) {
    for (int g = 0; g <= 2; ++g) {
      for (int d = 1; d <= 4; ++d) {
        if (!inapplicable_reason(m, g, d)) merged.insert(g, d, m, compute_hurwitz(m, g, d));
      }
    }
  }
  for (int g = 0; g <= 2; ++g) {
    for (int d = 1; d <= 4; ++d) {
      const auto cell = merged.cell(g, d);
      CHECK(cell.size() >= 2);
      for (const auto& [m, v] : cell) CHECK(v == cell.front().second);
    }
  }
}
