#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qskein::cli {

// Runs one command. Exit codes: 0 success, 2 malformed command line or
// unparsable input, 3 precondition violation during computation,
// 4 verification failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qskein::cli
