#pragma once

#include <string>
#include <vector>

namespace abspec::cli {

// Exit codes: 0 success, 1 configuration error, 2 root-count mismatch,
// 3 verification failure.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace abspec::cli
