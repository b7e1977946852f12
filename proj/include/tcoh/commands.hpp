#pragma once

#include <optional>
#include <string>

#include "tcoh/io.hpp"

namespace tcoh {

extern const char* const kToolVersion;

struct CommandRequest {
  std::string command;
  // Input references: file paths or built-in names.
  std::optional<std::string> algebra, module, target, sigma, map;
  Json field = "Q";    // field for built-in algebras
  Json bounds = Json::object();  // cap, max_power, s_max, length, seed, n, i, samples, max_degree, gldim_bound, vertex
  std::string format = "json";
  std::optional<std::string> out;
};

// Throws InputError on unknown keys or malformed values.
CommandRequest request_from_json(const Json& j);

struct CommandResult {
  int exit_code = 0;  // 0 affirmative, 1 negative or inconclusive, 2 input error, 3 internal error
  Json report;
  std::string rendered;  // report in the requested format
};

CommandResult run_command(const CommandRequest& r);
// Parses and runs a JSON request; never throws.
CommandResult run_request(const std::string& request_json);

// Human-readable form of a report.
std::string render_text(const Json& report);

}  // namespace tcoh
