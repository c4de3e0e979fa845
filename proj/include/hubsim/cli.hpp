#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hubsim
{

/// Process exit statuses of the command-line tool.
enum ExitCode : int
{
    kExitOk          = 0,
    kExitConfigError = 1,
    kExitIoError     = 2,
};

/// Runs the command-line tool with `args` (program name excluded). Per-point
/// progress goes to `out`, diagnostics and usage to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hubsim
