#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgg::cli {

// Runs one subcommand. Returns 0 on success/acceptance, 1 on rejection or
// when no solution exists, 2 on usage or format errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pgg::cli
