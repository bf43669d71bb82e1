#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace romankit::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 success or true verdict, 1 false verdict, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace romankit::cli
