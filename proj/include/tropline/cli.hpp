#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropline::cli {

// Dispatches one CLI invocation (argv without the program name). Writes the
// report to `out` (or the --out file), structured error JSON to `err`.
// Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace tropline::cli
