#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hplus::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kComputationalError = 3,
};

/// Runs the `hplus` command line. `args` excludes the program name.
/// Results go to `out` (or the --output file); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hplus::cli
