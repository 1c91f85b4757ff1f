#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class Method { character, recursion, closed_form, elsv_g0, oracle };

inline constexpr Method kAllMethods[] = {Method::character, Method::recursion, Method::closed_form,
                                         Method::elsv_g0, Method::oracle};

/// CLI spelling: "character", "recursion", "closed-form", "elsv-g0", "oracle".
std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

/// Empty when `method` can compute H_{g,d}; otherwise the reason it cannot.
std::optional<std::string> inapplicable_reason(Method method, int g, int d);

/// H_{g,d} by one method. Throws std::invalid_argument when inapplicable.
/// elsv-g0 returns the stored values 1 and 1/2 for d = 1, 2.
Rational compute_hurwitz(Method method, int g, int d);

struct TableKey {
  int genus;
  int degree;
  Method method;
  auto operator<=>(const TableKey&) const = default;
};

/// H_{g,d} values keyed by (genus, degree, method).
class HurwitzTable {
 public:
  void insert(int g, int d, Method method, Rational value);
  const Rational* find(int g, int d, Method method) const;

  /// Every method stored for (g, d), in Method order.
  std::vector<std::pair<Method, Rational>> cell(int g, int d) const;

  const std::map<TableKey, Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<TableKey, Rational> entries_;
};

/// Fills every cell g <= g_max, 1 <= d <= d_max under one method.
/// Throws std::invalid_argument if any cell is outside the method's range.
HurwitzTable build_table(int g_max, int d_max, Method method);

}  // namespace hurwitz
