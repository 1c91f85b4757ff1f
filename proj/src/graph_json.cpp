#include "hurwitz/graph_json.hpp"

#include <fstream>

namespace hurwitz {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw GraphParseError(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw GraphParseError(where + " is missing field '" + key + "'");
  return *it;
}

int nonnegative_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw GraphParseError(where + " must be an integer");
  const auto v = value.get<long long>();
  if (v < 0 || v > 1'000'000) throw GraphParseError(where + " must be a nonnegative integer");
  return static_cast<int>(v);
}

std::string label(const json& value, const std::string& where) {
  if (!value.is_string()) throw GraphParseError(where + " must be a string");
  return value.get<std::string>();
}

Partition profile(const json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) throw GraphParseError(where + " must be a nonempty array of positive integers");
  std::vector<int> parts;
  for (const auto& p : value) {
    const int e = nonnegative_int(p, where);
    if (e == 0) throw GraphParseError(where + " parts must be positive");
    parts.push_back(e);
  }
  return Partition::from_unordered(std::move(parts));
}

ComponentSpec component(const json& obj, std::size_t i) {
  const std::string where = "components[" + std::to_string(i) + "]";
  ComponentSpec c;
  c.id = label(field(obj, "id", where), where + ".id");
  c.genus = nonnegative_int(field(obj, "genus", where), where + ".genus");
  const std::string kind = label(field(obj, "kind", where), where + ".kind");
  if (kind == "dominant") {
    Dominant dom;
    dom.degree = nonnegative_int(field(obj, "degree", where), where + ".degree");
    if (auto it = obj.find("ramification"); it != obj.end()) {
      if (!it->is_array()) throw GraphParseError(where + ".ramification must be an array");
      for (std::size_t k = 0; k < it->size(); ++k) {
        const std::string rwhere = where + ".ramification[" + std::to_string(k) + "]";
        const json& entry = (*it)[k];
        dom.ramification.push_back(
            {label(field(entry, "point", rwhere), rwhere + ".point"), profile(field(entry, "profile", rwhere), rwhere + ".profile")});
      }
    }
    c.kind = std::move(dom);
  } else if (kind == "contracted") {
    c.kind = Contracted{label(field(obj, "image", where), where + ".image")};
  } else {
    throw GraphParseError(where + ".kind must be \"dominant\" or \"contracted\"");
  }
  return c;
}

NodeSpec node(const json& obj, std::size_t i) {
  const std::string where = "nodes[" + std::to_string(i) + "]";
  const json& branches = field(obj, "branches", where);
  if (!branches.is_array() || branches.size() != 2) throw GraphParseError(where + ".branches must list two component ids");
  return NodeSpec{{label(branches[0], where + ".branches[0]"), label(branches[1], where + ".branches[1]")},
                  label(field(obj, "image", where), where + ".image")};
}

}  // namespace

StableMapGraph graph_from_json(const json& doc) {
  StableMapGraph graph;
  graph.target_genus = nonnegative_int(field(doc, "target_genus", "document"), "target_genus");
  const json& components = field(doc, "components", "document");
  if (!components.is_array()) throw GraphParseError("components must be an array");
  for (std::size_t i = 0; i < components.size(); ++i) graph.components.push_back(component(components[i], i));
  if (auto it = doc.find("nodes"); it != doc.end()) {
    if (!it->is_array()) throw GraphParseError("nodes must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) graph.nodes.push_back(node((*it)[i], i));
  }
  return graph;
}

StableMapGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw GraphParseError(path.string() + ": " + e.what());
  }
  return graph_from_json(doc);
}

nlohmann::ordered_json to_json(const StableMapGraph& graph) {
  nlohmann::ordered_json doc;
  doc["target_genus"] = graph.target_genus;
  doc["components"] = nlohmann::ordered_json::array();
  for (const auto& c : graph.components) {
    nlohmann::ordered_json entry;
    entry["id"] = c.id;
    entry["genus"] = c.genus;
    if (const auto* dom = std::get_if<Dominant>(&c.kind)) {
      entry["kind"] = "dominant";
      entry["degree"] = dom->degree;
      entry["ramification"] = nlohmann::ordered_json::array();
      for (const auto& r : dom->ramification) {
        entry["ramification"].push_back(
            {{"point", r.point}, {"profile", std::vector<int>(r.profile.parts().begin(), r.profile.parts().end())}});
      }
    } else {
      entry["kind"] = "contracted";
      entry["image"] = std::get<Contracted>(c.kind).image;
    }
    doc["components"].push_back(std::move(entry));
  }
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : graph.nodes) {
    doc["nodes"].push_back({{"branches", {n.branches[0], n.branches[1]}}, {"image", n.image}});
  }
  return doc;
}

nlohmann::ordered_json to_json(const FormalDivisor& divisor) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [point, c] : divisor.coefficients()) out[point] = c;
  return out;
}

}  // namespace hurwitz
