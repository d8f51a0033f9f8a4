#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dosage {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitInputError = 1,
  kExitCapRefusal = 2,
  kExitInvariantViolation = 3,
};

/// Runs one CLI invocation. `args` excludes the program name, e.g.
/// {"extract", "--graph", "g.txt", "--k", "2"}. Output files go to --out-dir;
/// every run also writes manifest.json there.
int run_pipeline(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dosage
