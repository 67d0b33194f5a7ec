#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cylwalk::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,  // a suite failed or two methods disagree
  kInvalidInput = 2,
};

/// Runs one `walkers` invocation. `args` excludes the program name. Results
/// go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cylwalk::cli
