#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phase_ambiguity::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kPrecondition = 2,
  kNumerical = 3,
  kUsage = 64,
};

/// Runs the tool on `args` (without the program name). Results go to `out`
/// (or to --output), machine-readable errors to `err`, and "-" or a missing
/// input path reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace phase_ambiguity::cli
