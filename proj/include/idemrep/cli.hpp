#pragma once

#include <string>
#include <vector>

namespace idemrep {

/// Exit statuses, one per failure family.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitParse = 2,
  kExitCap = 3,
  kExitValidation = 4,
};

struct CliResult {
  int exit_code = kExitOk;
  /// What the command printed (or wrote to --out).
  std::string out;
  std::string err;
};

/// Runs one command. args excludes the program name. Output is a pure
/// function of the arguments, the caps file and the input files.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace idemrep
