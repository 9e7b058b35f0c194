#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shrinker::cli {

enum ExitCode : int {
  kOk = 0,
  kAssertionFailure = 1,
  kUsage = 2,
  kParse = 3,
  kInsufficientData = 4,
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shrinker::cli
