#pragma once

#include <string>
#include <vector>

namespace aec {

/// Exit codes of the aec command.
enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitInputError = 2,
  kExitInternal = 3,
  kExitNonSquare = 4,
  kExitDivisionByZero = 5,
};

struct CliResult {
  std::string out;  // JSON only
  std::string err;  // human-readable messages
  int exit = kExitOk;
};

/// Runs one aec command. `args` excludes the program name, e.g.
/// {"solve", "ninety_eight.json", "--threads", "8"}. A file argument of "-" reads
/// `input` instead of a file.
CliResult run_cli(const std::vector<std::string>& args, const std::string& input = {});

}  // namespace aec
