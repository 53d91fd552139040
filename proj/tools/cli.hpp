#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topo::cli {

/// Dispatches the topopaths subcommands (build-graph, find-paths, bench,
/// verify). Returns 0 on success, 1 on input errors, 2 on internal errors.
/// Data goes to files or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace topo::cli
