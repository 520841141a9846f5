#pragma once

#include <ostream>

namespace ufe::cli {

/// Runs the `ufe` command line. Exit codes: 0 success, 1 domain error
/// (power-of-two k, no solution, failed verification), 2 usage or parse
/// error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ufe::cli
