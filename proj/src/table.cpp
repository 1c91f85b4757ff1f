#include "hurwitz/table.hpp"

#include <stdexcept>
#include <string>

#include "hurwitz/character.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/recursion.hpp"

namespace hurwitz {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::character: return "character";
    case Method::recursion: return "recursion";
    case Method::closed_form: return "closed-form";
    case Method::elsv_g0: return "elsv-g0";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<std::string> inapplicable_reason(Method method, int g, int d) {
  if (g < 0) return "genus must be nonnegative";
  if (d < 1) return "degree must be at least 1";
  switch (method) {
    case Method::character: return std::nullopt;
    case Method::recursion:
      if (g > kMaxRecursionGenus) return "no recursion is known for genus >= 3";
      return std::nullopt;
    case Method::closed_form:
    case Method::elsv_g0:
      if (g != 0) return std::string(to_string(method)) + " only applies in genus 0";
      return std::nullopt;
    case Method::oracle:
      if (!oracle_within_bound(g, d)) {
        return "oracle enumeration bound exceeded (needs d <= " + std::to_string(kOracleMaxDegree) +
               " and r = 2g-2+2d <= " + std::to_string(kOracleMaxBranchPoints) + ")";
      }
      return std::nullopt;
  }
  return "unknown method";
}

namespace {

Rational elsv_with_degenerate_values(int d) {
  if (d == 1) return 1;
  if (d == 2) return Rational(1, 2);
  return elsv_genus0(d);
}

Rational recursion_value(int g, int d) {
  switch (g) {
    case 0: return h0_recursion(d);
    case 1: return h1_recursion(d);
    default: return h2_recursion(d);
  }
}

}  // namespace

Rational compute_hurwitz(Method method, int g, int d) {
  if (auto reason = inapplicable_reason(method, g, d)) throw std::invalid_argument(*reason);
  switch (method) {
    case Method::character: return connected_hurwitz(g, d);
    case Method::recursion: return recursion_value(g, d);
    case Method::closed_form: return h0_closed(d);
    case Method::elsv_g0: return elsv_with_degenerate_values(d);
    case Method::oracle: return oracle_connected(g, d);
  }
  throw std::invalid_argument("unknown method");
}

void HurwitzTable::insert(int g, int d, Method method, Rational value) {
  entries_.insert_or_assign(TableKey{g, d, method}, std::move(value));
}

const Rational* HurwitzTable::find(int g, int d, Method method) const {
  auto it = entries_.find(TableKey{g, d, method});
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::pair<Method, Rational>> HurwitzTable::cell(int g, int d) const {
  std::vector<std::pair<Method, Rational>> out;
  for (Method m : kAllMethods) {
    if (const Rational* v = find(g, d, m)) out.emplace_back(m, *v);
  }
  return out;
}

HurwitzTable build_table(int g_max, int d_max, Method method) {
  if (g_max < 0) throw std::invalid_argument("gmax must be nonnegative");
  if (d_max < 1) throw std::invalid_argument("dmax must be at least 1");
  for (int g = 0; g <= g_max; ++g) {
    for (int d = 1; d <= d_max; ++d) {
      if (auto reason = inapplicable_reason(method, g, d)) {
        throw std::invalid_argument("cell (g=" + std::to_string(g) + ", d=" + std::to_string(d) + "): " + *reason);
      }
    }
  }

  HurwitzTable table;
  if (method == Method::recursion) {
    // One pass per genus; each sequence reuses its lower-degree values.
    const std::vector<Rational> sequences[] = {
        h0_recursion_sequence(d_max),
        g_max >= 1 ? h1_recursion_sequence(d_max) : std::vector<Rational>{},
        g_max >= 2 ? h2_recursion_sequence(d_max) : std::vector<Rational>{},
    };
    for (int g = 0; g <= g_max; ++g) {
      for (int d = 1; d <= d_max; ++d) table.insert(g, d, method, sequences[g][static_cast<std::size_t>(d)]);
    }
    return table;
  }
  for (int g = 0; g <= g_max; ++g) {
    for (int d = 1; d <= d_max; ++d) table.insert(g, d, method, compute_hurwitz(method, g, d));
  }
  return table;
}

}  // namespace hurwitz
