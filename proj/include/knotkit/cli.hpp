#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotkit {

// Exit codes of the knotkit command.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitBudget = 3,
  kExitVerification = 4,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotkit
