#ifndef PVALENT_CLI_HPP
#define PVALENT_CLI_HPP

#include <ostream>
#include <string_view>

namespace pvalent::cli {

/// Stable exit codes of the command-line front end.
enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUsage = 2,
  kDomain = 3,
};

/// Radians, either a plain number or "pi*<number>" (optionally signed,
/// "pi" alone meaning pi). Throws ParseError otherwise.
double parse_angle(std::string_view text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pvalent::cli

#endif
