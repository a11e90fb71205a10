#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hecke::cli {

enum ExitCode : int { kOk = 0, kSuiteFailed = 1, kUsage = 2, kResource = 3 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
