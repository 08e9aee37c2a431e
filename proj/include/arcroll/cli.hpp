#pragma once

#include <ostream>

namespace arcroll {

// Exit codes: 0 success, 1 usage error, 2 degenerate or failed computation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arcroll
