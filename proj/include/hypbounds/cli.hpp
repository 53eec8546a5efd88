#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyp::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// args[0] is the program name. Output goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyp::cli
