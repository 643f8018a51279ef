#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lacuna::cli {

// Runs the command line given argv-style arguments (program name excluded).
// Returns the process exit code: 0 success, 1 domain/numeric error,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lacuna::cli
