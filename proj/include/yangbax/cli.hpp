#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yangbax::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kConstraintViolation = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses a real number: "p", "p/q", decimals, and multiples of pi such as
/// "pi/3", "-2*pi/5" or "0.5pi".
double parse_real(const std::string& text);

/// Tolerance resolution: explicit flag, then YANGBAX_TOL, then 1e-10.
double resolve_tolerance(const double* flag);

}  // namespace yangbax::cli
