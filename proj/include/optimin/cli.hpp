#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace optimin::cli {

/// Runs one command (arguments without the program name). Returns 0 on
/// success, 2 on usage or input errors, 1 on domain or resource errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optimin::cli
