#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tl {

// Runs the command line given as argv-style arguments (without the
// program name). Writes the report to `out` and machine-readable error
// JSON to `err`. Exit codes: 0 success/PASS, 1 verification FAIL,
// 2 usage error, 3 not evaluable.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tl
