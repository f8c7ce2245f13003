#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mloc {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs the `mloc` command line (arguments without the program name).
/// Reports go to `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mloc
