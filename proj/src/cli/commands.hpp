#pragma once

#include <iosfwd>

namespace cyclematch {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitInvariant = 3 };

// Entry point of the command-line tool; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclematch
