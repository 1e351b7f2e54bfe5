#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command-line front end: certify, normalize, pipeline, search, generate and
// sweep. The binary is a thin wrapper around run() so tests can drive it
// in-process.
namespace crossfree::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kClaimsFailed = 1,  // pipeline check or sweep bound failed
  kUsage = 2,         // bad flags, unreadable or malformed input
  kWitness = 3,       // certify found k pairwise related members
  kPrecondition = 4,  // pipeline input not weakly k-cross-free (no --force)
  kBudget = 5,        // search or sweep stopped before proving optimality
};

// `args` excludes the program name. Reports go to `out` unless --out names a
// file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossfree::cli
