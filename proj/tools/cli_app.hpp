#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfcount::cli {

/// Runs one command line. Returns 0 on success, 1 on input errors and 2 on
/// internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfcount::cli
