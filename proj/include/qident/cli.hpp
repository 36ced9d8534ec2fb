#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qident {

// Runs the command-line surface on the given argument list (without the
// program name). Returns 0 when everything passed, 1 when a verification
// failed, 2 on usage or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Default truncation order: the QIDENT_ORDER environment variable when set
// to a positive integer, otherwise 60.
int default_order();

}  // namespace qident
