#pragma once

#include <ostream>

namespace ritt {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitDomainError = 1,
    kExitVerificationFailed = 2,
    kExitUsage = 64,
};

/// Runs one command. Subcommands: decompose, compose, char, verify, extend,
/// graph, feasible.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ritt
