#pragma once

#include <iosfwd>

namespace quatroots::cli {

// Exit status: 0 solved and verified, 1 parse or solver error, 2 a residual,
// bound or agreement check failed.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quatroots::cli
