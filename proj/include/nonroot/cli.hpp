#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonroot {

enum ExitCode : int {
  kExitOk = 0,          // definitive result
  kExitAnchorFailed = 1,  // verify-paper: some anchor failed
  kExitAbstain = 2,     // no certificate / construction gave up
  kExitBudget = 3,
  kExitInput = 4,
};

/// Runs one command line (without the program name). JSON or text goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonroot
