#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aa::cli {

enum ExitCode : int {
  kOk = 0,
  kCounterexamples = 1,
  kUncertified = 2,
  kUsage = 64,
  kInvalidParams = 65,
  kInternal = 70,
  kIo = 74,
};

/// Runs one `aa` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aa::cli
