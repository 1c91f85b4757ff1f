#include "hurwitz/branch_divisor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace hurwitz {

int StableMapGraph::degree() const {
  int total = 0;
  for (const auto& c : components) {
    if (const auto* dom = std::get_if<Dominant>(&c.kind)) total += dom->degree;
  }
  return total;
}

void FormalDivisor::add(const std::string& point, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coefficients_.try_emplace(point, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coefficients_.erase(it);
  }
}

long FormalDivisor::coefficient(const std::string& point) const {
  auto it = coefficients_.find(point);
  return it == coefficients_.end() ? 0 : it->second;
}

long FormalDivisor::degree() const {
  long total = 0;
  for (const auto& [point, c] : coefficients_) total += c;
  return total;
}

bool FormalDivisor::is_effective() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const auto& kv) { return kv.second >= 0; });
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::duplicate_component: return "duplicate-component";
    case ViolationKind::unknown_component: return "unknown-component";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::zero_degree: return "zero-degree";
    case ViolationKind::bad_degree: return "bad-degree";
    case ViolationKind::profile_mismatch: return "profile-mismatch";
    case ViolationKind::duplicate_point: return "duplicate-point";
    case ViolationKind::riemann_hurwitz: return "riemann-hurwitz";
    case ViolationKind::unstable_rational: return "unstable-rational";
    case ViolationKind::unstable_elliptic: return "unstable-elliptic";
    case ViolationKind::node_image: return "node-image";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

long ramification_order(const Partition& profile) {
  long total = 0;
  for (int e : profile.parts()) total += e - 1;
  return total;
}

// Index of each component id; the first occurrence wins for duplicates.
std::unordered_map<std::string, std::size_t> index_components(const StableMapGraph& graph) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < graph.components.size(); ++i) index.try_emplace(graph.components[i].id, i);
  return index;
}

bool dual_graph_connected(const StableMapGraph& graph,
                          const std::unordered_map<std::string, std::size_t>& index) {
  const std::size_t n = graph.components.size();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = n;
  for (const auto& node : graph.nodes) {
    auto a = index.find(node.branches[0]);
    auto b = index.find(node.branches[1]);
    if (a == index.end() || b == index.end()) continue;
    const std::size_t ra = find(a->second);
    const std::size_t rb = find(b->second);
    if (ra != rb) {
      parent[ra] = rb;
      --classes;
    }
  }
  return classes == 1;
}

}  // namespace

ValidationReport validate(const StableMapGraph& graph) {
  ValidationReport report;
  auto violate = [&](ViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  const auto index = index_components(graph);
  {
    std::set<std::string> seen;
    for (const auto& c : graph.components) {
      if (!seen.insert(c.id).second) violate(ViolationKind::duplicate_component, "duplicate component id '" + c.id + "'");
    }
  }

  std::vector<int> branch_count(graph.components.size(), 0);
  bool nodes_resolve = true;
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    const NodeSpec& node = graph.nodes[k];
    for (const std::string& id : node.branches) {
      auto it = index.find(id);
      if (it == index.end()) {
        violate(ViolationKind::unknown_component, "node " + std::to_string(k) + " references unknown component '" + id + "'");
        nodes_resolve = false;
        continue;
      }
      ++branch_count[it->second];
      const ComponentSpec& c = graph.components[it->second];
      if (const auto* con = std::get_if<Contracted>(&c.kind); con && con->image != node.image) {
        violate(ViolationKind::node_image, "node " + std::to_string(k) + " maps to '" + node.image +
                                               "' but its branch on contracted component '" + c.id + "' maps to '" +
                                               con->image + "'");
      }
    }
  }

  if (!graph.components.empty() && nodes_resolve && !dual_graph_connected(graph, index)) {
    violate(ViolationKind::disconnected, "dual graph is disconnected");
  }
  if (graph.degree() == 0) violate(ViolationKind::zero_degree, "total degree d = 0; no component dominates the target");

  for (std::size_t i = 0; i < graph.components.size(); ++i) {
    const ComponentSpec& c = graph.components[i];
    if (const auto* dom = std::get_if<Dominant>(&c.kind)) {
      if (dom->degree < 1) {
        violate(ViolationKind::bad_degree, "dominant component '" + c.id + "' has degree < 1");
        continue;
      }
      std::set<std::string> points;
      long ramification = 0;
      bool profiles_ok = true;
      for (const auto& r : dom->ramification) {
        if (!points.insert(r.point).second) {
          violate(ViolationKind::duplicate_point, "component '" + c.id + "' lists point '" + r.point + "' twice");
          profiles_ok = false;
        }
        if (r.profile.size() != dom->degree) {
          violate(ViolationKind::profile_mismatch, "component '" + c.id + "': profile over '" + r.point +
                                                       "' sums to " + std::to_string(r.profile.size()) +
                                                       ", not the degree " + std::to_string(dom->degree));
          profiles_ok = false;
        }
        ramification += ramification_order(r.profile);
      }
      if (profiles_ok) {
        const long lhs = 2L * c.genus - 2;
        const long rhs = static_cast<long>(dom->degree) * (2L * graph.target_genus - 2) + ramification;
        if (lhs != rhs) {
          violate(ViolationKind::riemann_hurwitz, "Riemann-Hurwitz failure on component '" + c.id + "': 2g-2 = " +
                                                      std::to_string(lhs) + " but d(2h-2) + ramification = " +
                                                      std::to_string(rhs));
        }
      }
    } else {
      if (c.genus == 0 && branch_count[i] < 3) {
        violate(ViolationKind::unstable_rational, "contracted genus-0 component '" + c.id + "' has " +
                                                      std::to_string(branch_count[i]) + " < 3 nodes");
      } else if (c.genus == 1 && branch_count[i] == 0) {
        violate(ViolationKind::unstable_elliptic, "contracted genus-1 component '" + c.id + "' has no nodes");
      }
    }
  }
  return report;
}

int arithmetic_genus(const StableMapGraph& graph) {
  const auto index = index_components(graph);
  for (const auto& node : graph.nodes) {
    for (const auto& id : node.branches) {
      if (!index.contains(id)) throw std::invalid_argument("node references unknown component '" + id + "'");
    }
  }
  if (!dual_graph_connected(graph, index)) throw std::invalid_argument("dual graph is disconnected");
  int genus_sum = 0;
  for (const auto& c : graph.components) genus_sum += c.genus;
  return genus_sum + static_cast<int>(graph.nodes.size()) - static_cast<int>(graph.components.size()) + 1;
}

long expected_branch_degree(const StableMapGraph& graph) {
  return 2L * arithmetic_genus(graph) - 2 - static_cast<long>(graph.degree()) * (2L * graph.target_genus - 2);
}

InvalidGraph::InvalidGraph(ValidationReport report)
    : std::invalid_argument(report.violations.empty() ? "invalid stable map graph"
                                                      : "invalid stable map graph: " + report.violations.front().message),
      report_(std::move(report)) {}

FormalDivisor branch_divisor(const StableMapGraph& graph) {
  ValidationReport report = validate(graph);
  if (!report.ok()) throw InvalidGraph(std::move(report));

  FormalDivisor divisor;
  for (const auto& c : graph.components) {
    if (const auto* dom = std::get_if<Dominant>(&c.kind)) {
      for (const auto& r : dom->ramification) divisor.add(r.point, ramification_order(r.profile));
    } else {
      divisor.add(std::get<Contracted>(c.kind).image, 2L * c.genus - 2);
    }
  }
  for (const auto& node : graph.nodes) divisor.add(node.image, 2);
  return divisor;
}

}  // namespace hurwitz
