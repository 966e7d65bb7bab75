#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trapbound/errors.hpp"

namespace trapbound::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidInput = 2,
  kNoConvergence = 3,
  kUnboundedBelow = 4,
};

int exit_code_for(ErrorKind kind);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trapbound::cli
