#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hurwitz/table.hpp"

namespace hurwitz::cli {

enum class Status { ok, mismatch, invalid_input };

std::string_view to_string(Status status);

/// 0 for ok, 1 for mismatch, 2 for invalid input.
int exit_code(Status status);

enum class TableFormat { aligned_text, json, csv };

std::optional<TableFormat> parse_table_format(std::string_view name);

struct CommandResult {
  Status status = Status::ok;
  nlohmann::ordered_json payload;
  /// Rendered standard output. For JSON commands this is the indented payload.
  std::string output;
  /// Human-readable diagnostic for standard error; empty when ok.
  std::string diagnostic;
};

CommandResult cmd_compute(int genus, int degree, std::string_view method);
CommandResult cmd_table(int g_max, int d_max, std::string_view method, std::string_view format);
CommandResult cmd_crosscheck(int g_max, int d_max);
CommandResult cmd_branch_divisor(const std::filesystem::path& input);

/// Full command-line driver: parses arguments, runs one subcommand, writes
/// to out/err and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
