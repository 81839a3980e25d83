#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critedge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitResourceCap = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace critedge::cli
