#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitadm {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,     // parse or validation failure
  kExitPrecondition = 2,   // not solvable, exponentiality witness, threshold
  kExitDisagreement = 3,   // symbolic and probabilistic ranks differ
};

/// Runs the tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitadm
