#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcfiber::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInvalidTriangle = 3,
  kConstruction = 4,
  kInconsistent = 5,
};

/// Runs one command line (without the program name). Output that is not
/// redirected with --out goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcfiber::cli
