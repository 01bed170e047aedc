#pragma once

#include <iosfwd>

namespace jfunc {

/// Exit codes of the jfunc command.
enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_theorem = 2, exit_budget = 3 };

/// Entry point of the jfunc command, writing to the given streams. Reads
/// JFUNC_CACHE_DIR for the default cache directory.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jfunc
