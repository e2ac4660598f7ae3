#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptk {

/// Exit codes of decision commands.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and warnings to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptk
