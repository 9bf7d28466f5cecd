#pragma once

#include <ostream>

namespace pellpow {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitComplete = 0, kExitIncomplete = 1, kExitUsage = 2, kExitPrecision = 3 };

/// Runs the `pellpow` command line. Output goes to `out` (or the --out file),
/// diagnostics to `err`.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pellpow
