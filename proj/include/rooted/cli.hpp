#pragma once

#include <iosfwd>

namespace rooted {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPropertyFailure = 2,
  kExitBudget = 3,
};

// Parses argv, runs one subcommand and writes its report to out (or to the
// --output file).  Diagnostics go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rooted
