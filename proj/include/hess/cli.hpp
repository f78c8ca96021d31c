#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hess::cli {

// Dispatches one command line (without the program name).
// Exit codes: 0 success/verified, 1 verification failure, 2 usage error,
// 3 enumeration budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hess::cli
