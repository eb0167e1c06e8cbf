#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rsharp::cli {

// args excludes the program name. Returns the process exit code:
// 0 success or PASS, 1 verification FAIL, 2 user error, 3 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsharp::cli
