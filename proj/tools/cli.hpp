#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antichain::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace antichain::cli
