#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alphacalc::cli {

/// Dispatches one command. Arguments exclude the program name.
/// Exit codes: 0 success, 1 domain/math error, 2 usage error.
/// Results go to `out` (JSON or CSV), diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace alphacalc::cli
