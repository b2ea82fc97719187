#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chipfire::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 2,
  kCapExceeded = 3,
  kInvariantFailure = 4,
};

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Predicate outcomes never affect the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipfire::cli
