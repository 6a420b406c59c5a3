#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace kroots::cli {

enum ExitCode : int {
  kAllPass = 0,
  kMismatch = 1,
  kUsageError = 2,
};

/// Default enumeration cap; KROOTS_MAX_N, a config file or --max-n override it.
inline constexpr int kDefaultMaxN = 8;

/// Runs the kroots command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kroots::cli
