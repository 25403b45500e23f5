#pragma once

#include <ostream>

namespace mixlink {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitUsage = 1, kExitInconclusive = 2, kExitViolated = 3 };

/// Runs the `mixlink` command line (analyze, pullback, certify,
/// identity-check, sample) and returns its exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mixlink
