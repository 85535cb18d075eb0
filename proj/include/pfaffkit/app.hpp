#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pfaffkit {

inline constexpr const char* kSchemaVersion = "1.0";

struct Outcome {
  nlohmann::json envelope;
  int exit_code = 0;
};

/// Runs one command line (without the program name). Never throws; the
/// exit code is 2 only for internal invariant failures.
Outcome run_cli(const std::vector<std::string>& args);

/// Splits a script line into arguments; double quotes group words.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace pfaffkit
