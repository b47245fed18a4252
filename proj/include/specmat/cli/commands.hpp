#pragma once

#include <iosfwd>

namespace specmat::cli {

/// Process exit codes of the specmat tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitSpectrum = 3,
  kExitGuardrail = 4,
  kExitSingular = 5,
};

/// Environment variable overriding the default root tolerance (--tol wins).
inline constexpr const char* kTolEnvVar = "SPECMAT_TOL";

/// Runs one specmat command line. The result document goes to `out` (or to
/// --output), human-readable diagnostics to `err`. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace specmat::cli
