#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace supergrade {

/// Runs one command line (without the program name). Exit codes: 0 pass,
/// 1 verified negative, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supergrade
