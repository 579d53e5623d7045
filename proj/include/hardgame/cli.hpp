#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hardgame {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a mismatch or failed check, 2 on a usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardgame
