#pragma once

#include <iosfwd>

namespace acs::cli {

// Runs one CLI invocation.  Exit codes: 0 all checks ok, 1 verification
// failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace acs::cli
