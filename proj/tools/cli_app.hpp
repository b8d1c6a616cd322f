#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvkit::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,       // verification or table mismatch, batch line failures
  kParseError = 2,     // bad spec, bad flags, malformed input files
  kLimit = 3,          // cap exceeded or timeout
  kConsistency = 4,    // internal consistency failure
  kNotCovered = 5,     // no formula or table covers the group
};

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvkit::cli
