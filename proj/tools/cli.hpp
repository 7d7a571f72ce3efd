#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permpoly::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,  // the two face tests disagreed somewhere
  kUsageError = 2,    // bad arguments or unparsable input
  kCapExceeded = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permpoly::cli
