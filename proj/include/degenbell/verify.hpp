#pragma once

#include <string>
#include <vector>

#include "degenbell/report.hpp"

namespace degenbell {

// Names of every identity suite, in canonical run order.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Human-readable description of the fixed parameter sweep the suites cover.
std::string grid_description();

// Runs one suite. `seed` feeds only the randomized confluence suite; every
// other suite is deterministic over the fixed grid. Unknown names throw
// std::invalid_argument.
CheckReport run_suite(const std::string& name, unsigned seed);

std::vector<CheckReport> run_all_suites(unsigned seed);

}  // namespace degenbell
