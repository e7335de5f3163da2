#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace g2aff::cli {

enum ExitCode : int {
  kOk = 0,
  kComputationError = 1,
  kUsageError = 2,
  kSelftestFailure = 3,
};

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2aff::cli
