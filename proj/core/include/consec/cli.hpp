#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace consec {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNoWitness = 1,
  kExitInvalidInput = 2,
  kExitNotASpectrum = 3,
  kExitCounterexamples = 4,
};

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace consec
