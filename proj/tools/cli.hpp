// The `richman` command line. Exit status: 0 success, 1 domain or
// verification failure, 2 usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace richman::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace richman::cli
