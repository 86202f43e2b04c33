#ifndef REXCALC_TOOLS_CLI_HPP
#define REXCALC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rexcalc::cli {

enum ExitCode { kOk = 0, kUnexpected = 1, kUsage = 2, kBudget = 3 };

/// Runs the rexcalc command line; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rexcalc::cli

#endif
