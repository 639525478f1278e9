#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmtk {

// Full command line driver, callable in process. args excludes the program
// name; out and err receive what a terminal would show. Returns the exit
// code: 0 success, 1 user error, 2 internal consistency violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cmtk
