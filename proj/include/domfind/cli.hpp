#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domfind::cli {

// Entry point behind main(): parses argv, runs the selected subcommand,
// writes data to `out` and diagnostics to `err`.  Exit codes: 0 success,
// 1 validation or check failure, 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace domfind::cli
