#pragma once

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "hurwitz/branch_divisor.hpp"

namespace hurwitz {

class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the branch-divisor input document (see docs/branch_divisor_input.md).
/// Throws GraphParseError on schema violations; semantic problems are left
/// for validate().
StableMapGraph graph_from_json(const nlohmann::json& doc);
StableMapGraph load_graph(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const StableMapGraph& graph);
nlohmann::ordered_json to_json(const FormalDivisor& divisor);

}  // namespace hurwitz
