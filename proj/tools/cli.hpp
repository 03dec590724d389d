#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqprod::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kArgumentError = 2,
  kCapacityError = 3,
  kMismatch = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqprod::cli
