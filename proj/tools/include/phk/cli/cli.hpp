#pragma once

#include <string>
#include <vector>

namespace phk::cli {

struct RunResult {
  int exit_code{0};
  std::string output; // one JSON document, newline-terminated
  std::string out_path; // from --out; empty means stdout
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_falsified = 2;

/// Runs one command, e.g. {"hull", "fixtures/half_open_interval.json"}. Never throws;
/// errors are reported in the returned document with exit code 1. Writing to
/// `out_path` is left to the caller.
RunResult run(const std::vector<std::string> &args);

/// Verbs in the order listed by --help.
const std::vector<std::string> &verbs();

} // namespace phk::cli
