#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iboxes {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInvalidInput = 2 };

/// Runs one invocation. `args` excludes the program name; FILE arguments
/// equal to "-" read from `in`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err);

} // namespace iboxes
