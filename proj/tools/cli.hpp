#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suffup::cli {

enum ExitCode : int { Success = 0, Usage = 1, DataFailure = 2, OutputFailure = 3 };

/// Runs the command line `args` (args[0] is the program name) writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suffup::cli
