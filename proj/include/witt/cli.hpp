#pragma once

#include <ostream>

namespace witt {

/// Exit codes of the witt command.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // corpus suite failures, usage errors
  kExitSyntax = 2,
  kExitUndecided = 3,  // also unsupported input and --require-witness without a witness
  kExitVerify = 4,
};

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace witt
