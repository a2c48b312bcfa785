#pragma once

#include <string>
#include <vector>

namespace polyforge {

// Command-line entry point, callable in-process for tests. Exit codes:
// 0 success/certified, 1 unexpected error, 2 validation or parse error,
// 3 certification failure, 4 resource cap exceeded.
int run_cli(const std::vector<std::string>& args);

} // namespace polyforge
