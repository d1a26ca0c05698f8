#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reembed::cli {

/// Exit codes: 0 success, 1 usage or parse error, 2 mathematical refusal.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kRefused = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace reembed::cli
