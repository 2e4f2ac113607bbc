#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srk {

// Exit codes: 0 success, 1 negative verdict, 2 usage or domain error,
// 3 enumeration guard exceeded. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srk
