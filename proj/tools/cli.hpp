#pragma once

#include <iosfwd>

namespace tropseg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kNotEquidistant = 3,
  kLeafMismatch = 4,
};

/// Entry point shared by the executable and the tests. Data goes to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropseg::cli
