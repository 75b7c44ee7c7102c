#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace korb::cli {

// Runs one subcommand; writes a single JSON response line to out.
// Exit codes: 0 success, 1 domain error or failed verification (the
// response carries "error"), 2 malformed input.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace korb::cli
