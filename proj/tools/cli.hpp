#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zetadyn::cli {

/// Runs the command line (args exclude the program name). Returns the exit
/// code: 0 success, 1 a requested check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zetadyn::cli
