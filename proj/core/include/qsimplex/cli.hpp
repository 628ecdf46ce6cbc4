#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsimplex/tensalg.hpp"

namespace qsx {

/// Runs one CLI invocation (args exclude the program name). Exit codes:
/// 0 success, 1 verification/constraint failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a", "a+bi", "2i", "-i", or polar "r@theta" (radians).
cx parse_complex(const std::string& text);

}  // namespace qsx
