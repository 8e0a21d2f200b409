#pragma once

#include <iosfwd>

namespace matchplay::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kBudgetError = 3,
    kVerificationFailed = 4,
};

/// Runs the command line `argv` and returns the process exit code. Normal
/// output goes to `out` (or the --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace matchplay::cli
