#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlucky::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // conflicts found, search or clique budget exceeded
  kUsage = 2,     // bad flags, bad parameters, malformed files
};

/// Runs one invocation. args excludes the program name. "-" as a file path
/// means `in` for inputs and `out` for outputs.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace dlucky::cli
