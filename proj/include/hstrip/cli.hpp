#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hstrip::cli {

/// Process exit statuses.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNotConverged = 3,
};

/// Runs the command line `args` (args[0] is the program name).  Data goes to
/// `out`, diagnostics to `err`; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hstrip::cli
