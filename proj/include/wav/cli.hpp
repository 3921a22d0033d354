// Command-line front end: tabulate winners, decide WAV instances, generate
// reductions from exact-cover instances, and verify generated reductions.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wav {

// Exit codes: 0 = YES / winner printed, 1 = NO (or failed verification),
// 2 = input error, 3 = enumeration budget exceeded.
enum ExitCode : int {
    kExitYes = 0,
    kExitNo = 1,
    kExitInputError = 2,
    kExitBudget = 3,
};

// Runs the tool on `args` (without the program name). Results go to `out`,
// diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wav
