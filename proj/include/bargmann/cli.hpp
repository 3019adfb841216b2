#pragma once

// Batch command-line front end. Every subcommand builds a JSON document
// (sorted keys, rationals as "num/den" strings) and prints it, or a flat
// "path = value" listing with --format text.
//
// Exit codes: 0 success, 1 mismatch against --golden, 2 invalid input,
// 3 refused by the --cap resource guard.

#include <iosfwd>
#include <string>
#include <vector>

namespace bargmann::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCap = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bargmann::cli
