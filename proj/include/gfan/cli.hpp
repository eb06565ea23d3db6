#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gfan {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a property check fails or a computation gives up, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfan
