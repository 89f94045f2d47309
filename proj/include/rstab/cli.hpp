#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rstab::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 no solution / failed check, 2 usage or parse
/// error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rstab::cli
