#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raysec::app {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the raysec command line; args excludes the program name.
/// Reports go to `out` (or the --output file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raysec::app
