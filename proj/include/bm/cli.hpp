#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bm {

// Runs one CLI invocation. Machine output (JSON, edge lists) goes to `out`,
// human-readable summaries to `err`. Exit codes: 0 = YES/success, 1 = NO (or
// failed verification), 2 = error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bm
