#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrkm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitBadInput = 2,
  kExitNumerical = 3,
};

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrkm::cli
