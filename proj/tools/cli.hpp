#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degenbell::cli {

// Runs the command line given argv-style arguments (program name excluded).
// Exit code 0 on success (and all checks passing), 1 when a verification
// suite fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degenbell::cli
