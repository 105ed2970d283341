#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pimshort {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses "1000", "1e9", "2.5e3" and similar exactly. Throws ValidationError
// unless the value is a nonnegative integer below 2^63.
std::uint64_t parse_exact_integer(std::string_view text);

// Runs the tool; `args` excludes the program name. Records go to `out`,
// diagnostics and warnings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace pimshort
