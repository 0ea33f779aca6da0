#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rca::cli {

enum ExitStatus : int {
  kHolds = 0,     // success / property holds
  kFails = 1,     // property fails / counterexample found
  kUsage = 2,     // usage or input error
};

/// Runs the `rca` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rca::cli
