#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heptaq::cli {

enum ExitCode : int { Ok = 0, VerificationFailure = 1, UsageError = 2, InternalError = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heptaq::cli
