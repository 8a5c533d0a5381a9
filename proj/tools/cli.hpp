#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qu2::cli {

/// Runs one command. args excludes the program name.
/// Exit status: 0 success (including false predicates), 1 domain or capacity
/// error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qu2::cli
