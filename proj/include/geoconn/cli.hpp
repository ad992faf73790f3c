#pragma once

#include <string>
#include <vector>

namespace geoconn {

/// Command-line entry point. Exit codes: 0 success, 2 input error,
/// 3 budget/limit exceeded, 1 internal failure.
int cli_main(const std::vector<std::string>& args);

} // namespace geoconn
