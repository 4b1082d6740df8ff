#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridmatch {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
    kExitResourceCap = 3,
};

/// Runs the command line `args` (without the program name).  Machine output
/// goes to `out`, human-readable summaries and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridmatch
