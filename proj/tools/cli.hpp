#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace positroid::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kCapacity = 3,
  kContract = 4,
  kFixedPoint = 5,
};

/// Runs one command line. `args` excludes the program name; `in` is read
/// when no input option is given or when --file is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace positroid::cli
