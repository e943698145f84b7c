#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fracspec::cli {

/// Environment variable overriding the quadrature tolerance (abs and rel).
inline constexpr const char* kToleranceEnv = "FRACSPEC_QUAD_TOL";

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kNumericalFailure = 2 };

/// Runs one subcommand. args[0] is the program name. Artifacts go to
/// --output when given (summary line on `out`), otherwise to `out` with the
/// summary on `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fracspec::cli
