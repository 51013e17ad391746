#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latproj {

/// Runs one CLI command.  Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 2 input error, 3 precision (ambiguous floor),
/// 4 capability refusal (enumeration or search too large).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latproj
