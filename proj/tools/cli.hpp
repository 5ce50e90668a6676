#pragma once

namespace tinnots {

// Parses argv and runs one subcommand. Returns the process exit code:
// 0 success, 2 invalid arguments, 3 precondition rejection, 4 I/O failure.
int run_cli(int argc, const char* const* argv);

}  // namespace tinnots
