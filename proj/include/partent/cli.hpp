#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partent::cli {

enum ExitCode : int {
  kOk = 0,
  kTableMismatch = 1,
  kMalformedInput = 2,
  kNumericalFailure = 3,
  kInfeasible = 4,
};

// Entry point shared by the executable and the tests. `args` includes the
// program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partent::cli
