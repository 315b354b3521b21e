#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monodromy::cli {

// Runs one CLI invocation (argv without the program name). Returns the exit
// code: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monodromy::cli
