#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwvc {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,             // solved to optimality / command succeeded
  kExitInputError = 1,     // unreadable or malformed input, bad flags
  kExitBudgetExpired = 2,  // limit reached; a valid incumbent was still emitted
  kExitNotACover = 3,      // `verify`: the file is not a vertex cover
};

/// Runs the `mwvc` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwvc
