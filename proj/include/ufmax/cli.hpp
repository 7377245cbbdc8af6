// Subcommand front end: bound, sieve, split, solve, verify, analyze.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ufmax {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitBadArguments = 2,
};

int cli_dispatch(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same, with args[0] as the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "LO:HI" with 1 <= LO <= HI. Throws std::invalid_argument.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);

}  // namespace ufmax
