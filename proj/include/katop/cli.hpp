#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace katop {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
    kExitHolds = 0,     ///< equal / holds / true
    kExitFails = 1,     ///< not equal / fails / false
    kExitError = 2,     ///< usage or parse error, or inconclusive
};

/// Runs the `katop` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace katop
