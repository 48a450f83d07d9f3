#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mapdist {

// Exit codes: 0 success, 1 failed verification or computation, 2 usage error.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapdist
