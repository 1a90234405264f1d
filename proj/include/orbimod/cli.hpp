#pragma once

// Command dispatch for the orbimod executable and the Python binding.
// Exit codes: 0 success, 1 domain error or failed check, 2 schema/usage error.

#include <string>
#include <string_view>

#include "json.hpp"

namespace orbimod {

enum class Command { Surface, Bundle, Strata, Poincare, Spectral, Reps, Check };
enum class Format { Json, Text };

/// Throws SchemaError for an unknown name.
Command parse_command(std::string_view name);
std::string to_string(Command command);
Format parse_format(std::string_view name);

struct JobSpec {
  Command command = Command::Surface;
  nlohmann::ordered_json input;
  Format format = Format::Json;
};

/// Parses and validates the document for the command. Throws SchemaError
/// naming the offending field path, e.g. "cone_points[0].alpha".
JobSpec parse_input(Command command, std::string_view document, Format format = Format::Json);

struct RunResult {
  int exit_code = 0;
  std::string output;  // stdout
  std::string error;   // stderr, a JSON error object when non-empty
};

/// Never throws; failures are reported through exit_code and error.
RunResult run(const JobSpec& job);

/// parse_input followed by run, with schema errors mapped to exit code 2.
RunResult run_command(std::string_view command, std::string_view document, std::string_view format = "json");

/// Report document for a job as JSON, throwing DomainError on math failures.
nlohmann::ordered_json report(const JobSpec& job);

/// Human-readable rendering that mirrors the JSON structure.
std::string render_text(const nlohmann::ordered_json& value);

}  // namespace orbimod
