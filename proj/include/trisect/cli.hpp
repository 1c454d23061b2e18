#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisect::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kRefused = 3,
};

// Runs one command line (without the program name). FILE arguments of "-" or omitted read `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace trisect::cli
