#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ssq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInternal = 3,
};

// Entry point of the ssquintic tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssq::cli
