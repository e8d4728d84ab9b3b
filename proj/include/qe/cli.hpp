#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qe {

enum ExitCode { kExitOk = 0, kExitMismatch = 1, kExitInputError = 2 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qe
