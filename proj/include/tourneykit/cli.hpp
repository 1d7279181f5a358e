#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tourneykit {

// Runs one CLI invocation. Machine-readable JSON report on `out`.
// Exit codes: 0 success/true, 1 certified negative, 2 Unknown,
// 3 usage/input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tourneykit
