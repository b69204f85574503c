#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsr::cli {

// Runs one CLI invocation; reports go to `out`, diagnostics to `err`.
// Exit statuses: 0 ok, 2 parse/usage, 3 validation, 4 domain, 5 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tsr::cli
