#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slp::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, resource_error = 3 };

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace slp::cli
