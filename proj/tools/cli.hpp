#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rectdist::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,  // bad arguments, unreadable or malformed input
  kDimensionMismatch = 3,
};

/// Runs the tool on `args` (without the program name), writing data to `out`
/// and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rectdist::cli
