#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3hilb::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kNegativeResult = 3;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace k3hilb::cli
