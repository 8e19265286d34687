#pragma once

#include <iosfwd>

namespace distcol {

/// Entry point of the `distcol` command-line tool. Returns the process exit
/// code: 0 when every check passed, 1 when a check or measurement failed,
/// 2 for usage and validation errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace distcol
