#include "hurwitz/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hurwitz/branch_divisor.hpp"
#include "hurwitz/character.hpp"
#include "hurwitz/graph_json.hpp"

namespace hurwitz::cli {

using hurwitz::to_string;
using nlohmann::ordered_json;

std::string_view to_string(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::mismatch: return "mismatch";
    case Status::invalid_input: return "invalid-input";
  }
  return "unknown";
}

int exit_code(Status status) {
  switch (status) {
    case Status::ok: return 0;
    case Status::mismatch: return 1;
    case Status::invalid_input: return 2;
  }
  return 2;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "aligned-text") return TableFormat::aligned_text;
  if (name == "json") return TableFormat::json;
  if (name == "csv") return TableFormat::csv;
  return std::nullopt;
}

namespace {

std::string render(const ordered_json& payload) { return payload.dump(2) + "\n"; }

CommandResult json_result(Status status, ordered_json payload, std::string diagnostic = {}) {
  CommandResult result;
  result.status = status;
  payload["status"] = std::string(to_string(status));
  // Keep "status" first for readability.
  ordered_json ordered;
  ordered["status"] = payload["status"];
  for (auto& [key, value] : payload.items()) {
    if (key != "status") ordered[key] = value;
  }
  result.output = render(ordered);
  result.payload = std::move(ordered);
  result.diagnostic = std::move(diagnostic);
  return result;
}

CommandResult invalid(const std::string& message, ordered_json extra = ordered_json::object()) {
  extra["error"] = message;
  return json_result(Status::invalid_input, std::move(extra), "error: " + message);
}

std::optional<std::string> range_error(const char* name, int value, int minimum) {
  if (value < minimum) return std::string(name) + " must be at least " + std::to_string(minimum);
  return std::nullopt;
}

}  // namespace

CommandResult cmd_compute(int genus, int degree, std::string_view method_name) {
  const auto method = parse_method(method_name);
  if (!method) return invalid("unknown method '" + std::string(method_name) + "'");
  if (auto reason = inapplicable_reason(*method, genus, degree)) return invalid(*reason);

  ordered_json payload;
  payload["g"] = genus;
  payload["d"] = degree;
  payload["r"] = branch_point_count(genus, degree);
  payload["method"] = std::string(to_string(*method));
  payload["value"] = to_string(compute_hurwitz(*method, genus, degree));
  if (*method == Method::elsv_g0 && degree <= 2) payload["degenerate"] = true;
  return json_result(Status::ok, std::move(payload));
}

CommandResult cmd_table(int g_max, int d_max, std::string_view method_name, std::string_view format_name) {
  const auto method = parse_method(method_name);
  if (!method) return invalid("unknown method '" + std::string(method_name) + "'");
  const auto format = parse_table_format(format_name);
  if (!format) return invalid("unknown format '" + std::string(format_name) + "'");
  if (auto e = range_error("gmax", g_max, 0)) return invalid(*e);
  if (auto e = range_error("dmax", d_max, 1)) return invalid(*e);

  HurwitzTable table;
  try {
    table = build_table(g_max, d_max, *method);
  } catch (const std::invalid_argument& e) {
    return invalid(e.what());
  }

  struct Row {
    int g, d, r;
    std::string value;
  };
  std::vector<Row> rows;
  for (const auto& [key, value] : table.entries()) {
    rows.push_back({key.genus, key.degree, branch_point_count(key.genus, key.degree), to_string(value)});
  }

  CommandResult result;
  ordered_json payload;
  payload["status"] = "ok";
  payload["method"] = std::string(to_string(*method));
  payload["gmax"] = g_max;
  payload["dmax"] = d_max;
  payload["rows"] = ordered_json::array();
  for (const auto& row : rows) payload["rows"].push_back({{"g", row.g}, {"d", row.d}, {"r", row.r}, {"value", row.value}});

  std::ostringstream out;
  switch (*format) {
    case TableFormat::json: out << payload.dump(2) << '\n'; break;
    case TableFormat::csv:
      out << "g,d,r,value\n";
      for (const auto& row : rows) out << row.g << ',' << row.d << ',' << row.r << ',' << row.value << '\n';
      break;
    case TableFormat::aligned_text: {
      std::size_t width = 5;
      for (const auto& row : rows) width = std::max(width, row.value.size());
      out << std::setw(3) << "g" << ' ' << std::setw(4) << "d" << ' ' << std::setw(4) << "r" << "  "
          << std::setw(static_cast<int>(width)) << "value" << '\n';
      for (const auto& row : rows) {
        out << std::setw(3) << row.g << ' ' << std::setw(4) << row.d << ' ' << std::setw(4) << row.r << "  "
            << std::setw(static_cast<int>(width)) << row.value << '\n';
      }
      break;
    }
  }
  result.status = Status::ok;
  result.payload = std::move(payload);
  result.output = out.str();
  return result;
}

CommandResult cmd_crosscheck(int g_max, int d_max) {
  if (auto e = range_error("gmax", g_max, 0)) return invalid(*e);
  if (auto e = range_error("dmax", d_max, 1)) return invalid(*e);

  ordered_json cells = ordered_json::array();
  ordered_json mismatches = ordered_json::array();
  for (int g = 0; g <= g_max; ++g) {
    for (int d = 1; d <= d_max; ++d) {
      ordered_json values = ordered_json::object();
      std::optional<Rational> reference;
      bool agree = true;
      for (Method m : kAllMethods) {
        if (inapplicable_reason(m, g, d)) continue;
        const Rational v = compute_hurwitz(m, g, d);
        values[std::string(to_string(m))] = to_string(v);
        if (!reference) reference = v;
        else if (*reference != v) agree = false;
      }
      ordered_json cell{{"g", g}, {"d", d}, {"r", branch_point_count(g, d)}, {"values", values}, {"agree", agree}};
      if (!agree) mismatches.push_back({{"g", g}, {"d", d}});
      cells.push_back(std::move(cell));
    }
  }

  ordered_json payload;
  payload["gmax"] = g_max;
  payload["dmax"] = d_max;
  payload["cell_count"] = cells.size();
  payload["cells"] = std::move(cells);
  payload["mismatches"] = mismatches;
  if (!mismatches.empty()) {
    return json_result(Status::mismatch, std::move(payload),
                       "error: " + std::to_string(mismatches.size()) + " cell(s) disagree across methods");
  }
  return json_result(Status::ok, std::move(payload));
}

CommandResult cmd_branch_divisor(const std::filesystem::path& input) {
  StableMapGraph graph;
  try {
    graph = load_graph(input);
  } catch (const GraphParseError& e) {
    return invalid(e.what());
  }

  const ValidationReport report = validate(graph);
  if (!report.ok()) {
    ordered_json violations = ordered_json::array();
    std::string diagnostic = "error: invalid stable map graph";
    for (const auto& v : report.violations) {
      violations.push_back({{"kind", std::string(to_string(v.kind))}, {"message", v.message}});
      diagnostic += "\n  " + v.message;
    }
    ordered_json extra;
    extra["error"] = "invalid stable map graph";
    extra["violations"] = std::move(violations);
    return json_result(Status::invalid_input, std::move(extra), diagnostic);
  }

  const FormalDivisor divisor = branch_divisor(graph);
  const int genus = arithmetic_genus(graph);
  const long r = expected_branch_degree(graph);
  ordered_json payload;
  payload["divisor"] = to_json(divisor);
  payload["arithmetic_genus"] = genus;
  payload["target_genus"] = graph.target_genus;
  payload["d"] = graph.degree();
  payload["r"] = r;
  payload["divisor_degree"] = divisor.degree();
  payload["degree_check"] = divisor.degree() == r;
  payload["effective"] = divisor.is_effective();
  if (divisor.degree() != r) {
    return json_result(Status::mismatch, std::move(payload), "error: divisor degree differs from r");
  }
  return json_result(Status::ok, std::move(payload));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hurwitz numbers and branch divisors of stable maps", "hurwitz"};
  app.require_subcommand(1);

  int genus = 0;
  int degree = 1;
  int g_max = 0;
  int d_max = 1;
  std::string method = "character";
  std::string format = "aligned-text";
  std::string input;

  auto* compute = app.add_subcommand("compute", "Compute H_{g,d} with one method");
  compute->add_option("-g,--genus", genus, "Source genus")->required();
  compute->add_option("-d,--degree", degree, "Degree of the cover")->required();
  compute->add_option("--method", method, "character | recursion | closed-form | elsv-g0 | oracle")
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "Tabulate H_{g,d} for g <= gmax, d <= dmax");
  table->add_option("--gmax", g_max, "Largest genus")->required();
  table->add_option("--dmax", d_max, "Largest degree")->required();
  table->add_option("--method", method, "character | recursion | closed-form | elsv-g0 | oracle")
      ->capture_default_str();
  table->add_option("--format", format, "aligned-text | json | csv")->capture_default_str();

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare every applicable method cell by cell");
  crosscheck->add_option("--gmax", g_max, "Largest genus")->required();
  crosscheck->add_option("--dmax", d_max, "Largest degree")->required();

  auto* divisor = app.add_subcommand("branch-divisor", "Evaluate the branch divisor of a stable map graph");
  divisor->add_option("--input", input, "JSON stable map graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code(Status::invalid_input);
  }

  CommandResult result;
  if (*compute) result = cmd_compute(genus, degree, method);
  else if (*table) result = cmd_table(g_max, d_max, method, format);
  else if (*crosscheck) result = cmd_crosscheck(g_max, d_max);
  else result = cmd_branch_divisor(input);

  out << result.output;
  if (!result.diagnostic.empty()) err << result.diagnostic << '\n';
  return exit_code(result.status);
}

}  // namespace hurwitz::cli
