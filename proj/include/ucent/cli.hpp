#pragma once

#include <iosfwd>

namespace ucent {

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "UCENT_WORKERS";

/// Runs the command line. Output that has no -o target goes to `out`;
/// diagnostics go to `err` as a single line. Returns 0 on success, 2 on a
/// usage error and 1 on any other failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ucent
