#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace itp {

// args excludes the program name. 0 success, 1 logical failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itp
