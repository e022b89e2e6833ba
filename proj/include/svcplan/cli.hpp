#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svcplan {

// Runs one command-line invocation (without the program name) against the
// given streams and returns the process exit code: 0 success, 1 usage,
// 2 validation, 3 no-entry, 4 unsatisfiable-goal, 5 unreachable-goal,
// 6 negative-cycle.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace svcplan
