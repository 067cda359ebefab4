#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "soficlab/errors.hpp"

namespace soficlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

std::string_view tool_version();

/// Merged parameters of one subcommand: config file values overridden by flags.
struct RunConfig {
  std::string command;
  Json params = Json::object();
  std::uint64_t seed = 1;
  bool timings = false;
};

struct CommandResult {
  int exit_code = kExitPass;
  Json report;
  /// CSV for --plot-data; empty when the command has nothing to plot.
  std::string plot_csv;
};

/// Runs one subcommand. Library errors propagate; run_command maps them to
/// exit codes.
CommandResult execute(const RunConfig& config);

/// execute with soficlab::Error mapped to kExitUsage and a diagnostic report.
CommandResult run_command(const RunConfig& config);

/// Indented JSON with a trailing newline.
std::string render(const Json& report);

/// YAML (or JSON) file as nested maps; the top level must be a map.
/// Keys `seed` and `timings` are lifted into the config by the caller.
Json load_config_file(const std::string& path);

/// Converts one YAML document to JSON.
Json yaml_to_json(std::string_view text);

}  // namespace soficlab::cli
