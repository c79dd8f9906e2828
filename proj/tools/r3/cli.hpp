#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace r3::cli {

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on a domain error and 2 on
// a parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace r3::cli
