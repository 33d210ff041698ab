#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsearch::cli {

// Entry point behind the qsearch binary. args excludes the program name.
// Exit codes: 0 success, 1 usage or validation error, 2 verification
// failure (failed `verify` check or sweep rows with errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsearch::cli
