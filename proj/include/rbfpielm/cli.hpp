#pragma once

#include <ostream>

namespace rbfpielm {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitConfig = 2, kExitNumeric = 3 };

/// Entry point of the `rbf_pielm` tool: `solve` and `sweep` subcommands.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rbfpielm
