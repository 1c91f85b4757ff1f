#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hurwitz/partitions.hpp"

namespace hurwitz {

/// Ramification over one named point of the target: sheet multiplicities.
struct Ramification {
  std::string point;
  Partition profile;
};

/// A component that maps onto the target with the given degree. Points not
/// listed are unramified.
struct Dominant {
  int degree = 0;
  std::vector<Ramification> ramification;
};

/// A component collapsed to a single point of the target.
struct Contracted {
  std::string image;
};

struct ComponentSpec {
  std::string id;
  int genus = 0;
  std::variant<Dominant, Contracted> kind;

  bool is_dominant() const { return std::holds_alternative<Dominant>(kind); }
};

/// A node joining two branches, possibly on the same component.
struct NodeSpec {
  std::array<std::string, 2> branches;
  std::string image;

  bool is_self_node() const { return branches[0] == branches[1]; }
};

/// Combinatorial stable map from a nodal curve to a nonsingular curve of
/// genus target_genus.
struct StableMapGraph {
  int target_genus = 0;
  std::vector<ComponentSpec> components;
  std::vector<NodeSpec> nodes;

  /// Sum of the degrees of the dominant components.
  int degree() const;
};

/// Finitely supported integer-valued function on target points. Zero
/// coefficients are never stored.
class FormalDivisor {
 public:
  void add(const std::string& point, long coefficient);
  long coefficient(const std::string& point) const;
  long degree() const;
  bool is_effective() const;
  const std::map<std::string, long>& coefficients() const { return coefficients_; }

  bool operator==(const FormalDivisor&) const = default;

 private:
  std::map<std::string, long> coefficients_;
};

enum class ViolationKind {
  duplicate_component,
  unknown_component,
  disconnected,
  zero_degree,
  bad_degree,
  profile_mismatch,
  duplicate_point,
  riemann_hurwitz,
  unstable_rational,
  unstable_elliptic,
  node_image,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Reports every violation; never throws.
ValidationReport validate(const StableMapGraph& graph);

/// Sum of component genera + #nodes - #components + 1. Throws
/// std::invalid_argument when the dual graph is disconnected.
int arithmetic_genus(const StableMapGraph& graph);

/// 2 g(C) - 2 - d (2 g(D) - 2).
long expected_branch_degree(const StableMapGraph& graph);

class InvalidGraph : public std::invalid_argument {
 public:
  explicit InvalidGraph(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Ramification of each dominant component, plus (2g - 2)[p] for each
/// contracted component over p, plus 2[p] for each node over p.
/// Throws InvalidGraph unless validate(graph) is ok.
FormalDivisor branch_divisor(const StableMapGraph& graph);

}  // namespace hurwitz
