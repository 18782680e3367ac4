#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spectra::cli {

/// Process exit codes; part of the public interface.
enum ExitCode : int {
  kOk = 0,
  kBadFlags = 1,
  kSolverError = 2,
  kCheckFailed = 3,  // table --check mismatch, --assert-monotone, asymptote --assert
  kHftAssertFailed = 4,
};

/// Runs one command line (args[0] is the program name). CSV goes to `out` or to
/// the --out file; diagnostics go to `err` only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectra::cli
