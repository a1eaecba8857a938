// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

namespace telegraph {

/// Parse and dispatch one CLI invocation. `args` excludes the program name.
/// Returns the process exit status: 0 success, 1 numerical failure,
/// 2 usage error.
int run_cli(const std::vector<std::string>& args);

}  // namespace telegraph
