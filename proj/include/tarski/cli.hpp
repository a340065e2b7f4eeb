#ifndef TARSKI_CLI_HPP
#define TARSKI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tarski::cli {

/// Exit codes: 0 success, 1 violated property or failed postcondition,
/// 2 usage or parse error.
enum exit_code : int { ok = 0, violation = 1, usage = 2 };

/// Runs one command line (without the program name).
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace tarski::cli

#endif
