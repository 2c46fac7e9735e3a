#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gc1p::cli {

enum ExitCode : int {
  kOk = 0,          // property holds, Satisfied, suite passed
  kFailed = 1,      // property fails, Exhausted, suite failed
  kUndecided = 2,   // timeout or node limit
  kUsage = 3,
  kInputError = 4,  // unreadable file or malformed content
};

/// Runs one invocation. `args` excludes the program name. A path of "-"
/// reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gc1p::cli
