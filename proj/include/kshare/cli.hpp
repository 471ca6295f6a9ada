#pragma once
// Command-line surface: ingest -> graph -> stats/simulate/trace-root/export.

#include <iosfwd>
#include <string>
#include <vector>

namespace kshare {

// Runs one CLI invocation. argv excludes the program name. Data goes to out,
// diagnostics to err. Returns 0 on success, 1 on usage errors, 2 on data
// errors.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace kshare
