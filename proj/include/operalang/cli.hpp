#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace operalang {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerification = 1,  // NOT EQUIVALENT, failed laws, faithfulness violation
  kExitParse = 2,         // malformed input or usage
  kExitArity = 3,         // position or arity out of range
};

/// Runs one command (`args` excludes the program name). Output goes to
/// `out` only when the command completes; diagnostics go to `err`. An
/// argument `-` is replaced by the whole of `in`, trimmed.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace operalang
