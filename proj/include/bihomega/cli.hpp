#pragma once

#include <ostream>
#include <span>
#include <string>

namespace bihomega {

/// Runs one command line (without the program name). Returns 0 when every
/// check passed or a construction succeeded, 1 when a checker reported
/// violations, and 2 for usage, input or resolution errors.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bihomega
