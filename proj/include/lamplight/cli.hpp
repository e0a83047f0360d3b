#pragma once

// Command-line driver. Exit codes: 0 success, 1 a check ran and failed
// (metric mismatch, family property refuted), 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace lamplight {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lamplight
