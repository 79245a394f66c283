#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace commlip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "paper" or comma-separated "start:step:stop" segments.
std::vector<double> parse_grid_spec(const std::string& spec);

} // namespace commlip::cli
