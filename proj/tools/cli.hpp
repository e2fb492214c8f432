#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zigzag::cli {

// Exit codes: 0 success, 1 invalid input, 2 a verified identity failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerification = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zigzag::cli
