// Command-line front end; exposed as a function so tests can drive it.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptv {

/// Runs one CLI invocation.  Returns 0 on success, 1 on computation failure
/// (nonconvergence, non-geometric solution), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptv
