#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rough {

// Runs one CLI command. `args` excludes the program name. Reports are
// assembled fully before anything is written to `out`; diagnostics go to
// `err`. Exit codes: 0 success, 1 validation error, 2 parse error,
// 3 property/law failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rough
