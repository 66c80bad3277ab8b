#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gromov {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err` as a single `error code=<id> msg=<text>` line.
///
/// Exit codes: 0 success, 2 usage or parse error, 1 domain error.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace gromov
