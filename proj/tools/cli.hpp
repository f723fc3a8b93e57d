#pragma once

#include <iosfwd>

namespace graphburn::cli {

// Exit codes: 0 success, 1 invalid result / verification or I/O failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphburn::cli
