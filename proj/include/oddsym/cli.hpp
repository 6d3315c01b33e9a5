#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddsym {

// args excludes the program name; returns the process exit code
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddsym
