#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace settop {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitUsage = 2,
  kExitViolations = 3,
};

/// Runs the tool on `args` (without the program name). All output goes to
/// `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace settop
