#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pc::cli {

enum ExitCode {
    kOk = 0,
    kInputError = 1,
    kBudgetExceeded = 2,
    kContradiction = 3,
};

/// Runs `pc <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pc::cli
