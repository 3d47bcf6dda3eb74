#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cordon::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,       // bad flags, bad config, contract violations
  kInfeasible = 3,  // some target cannot be protected
  kLeak = 4,        // verification found a path to a target
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cordon::cli
