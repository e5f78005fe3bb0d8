#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace breakloops::cli {

enum ExitCode : int {
    kOk = 0,
    kLoopsFound = 1,
    kValidationError = 2,
    kInternalError = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace breakloops::cli
