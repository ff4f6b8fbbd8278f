#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bhlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a..b" (inclusive), "a,b,c" or "a". Throws std::invalid_argument.
std::vector<unsigned> parse_uint_list(const std::string& text);

}  // namespace bhlab::cli
