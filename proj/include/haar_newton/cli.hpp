#ifndef HAAR_NEWTON_CLI_HPP
#define HAAR_NEWTON_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace haar_newton::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitBreakdown = 3;

/// Runs one command line (without the program name). Reports go to `out`
/// (or to --out PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace haar_newton::cli

#endif  // HAAR_NEWTON_CLI_HPP
