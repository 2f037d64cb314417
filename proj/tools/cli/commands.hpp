#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace traysight::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitNg = 1,     ///< placement verdict NG
    kExitError = 2,  ///< operational error: bad input, I/O, parse failure
};

/// Runs the `traysight` command line. Verdict and metric records go to `out`;
/// diagnostics, warnings and the ASCII tray map go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace traysight::cli
