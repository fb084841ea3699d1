#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entrench::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,        ///< success, or the queried statement holds
  kNegative = 1,  ///< the queried statement is false, or a law failed
  kUsage = 2,     ///< bad arguments or unreadable input
  kRefused = 3,   ///< a checker's structural precondition does not hold
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace entrench::cli
