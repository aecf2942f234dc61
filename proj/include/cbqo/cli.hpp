#pragma once

// Command-line front end. Exit codes: 0 true or witness found, 1 false or no
// witness, 2 input error, 3 failed precondition.

#include <iosfwd>

namespace cbqo::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cbqo::cli
