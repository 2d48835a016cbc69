#pragma once

#include <iosfwd>

namespace yendo {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace yendo
