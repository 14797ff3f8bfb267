#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRuntimeFailure = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (program name excluded). Data goes to `out`
/// unless --out names a file; diagnostics and summaries go to `err` or `out`
/// as documented in the README.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "4..9" or "4,6,8" into a list of orders. Throws std::invalid_argument.
std::vector<int> parse_orders(const std::string& text);

/// Parses a comma-separated list of reals. Throws std::invalid_argument.
std::vector<double> parse_reals(const std::string& text);

}  // namespace abm::cli
