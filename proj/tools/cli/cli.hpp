#pragma once

// isosquare command-line interface.
//
// Exit codes: 0 success or member, 1 negative verdict (non-member, failed
// property suite), 2 usage error or violated precondition.
//
// Environment:
//   ISOSQUARE_FORMAT          default output format (plain, csv, json-lines)
//   ISOSQUARE_CHECKPOINT_DIR  base directory for relative --checkpoint paths

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "isosquare/natural.hpp"

namespace isosquare::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Decimal integer or the shorthands "b^e" (e.g. 10^7, 2^20). Throws
/// InvalidArgument on malformed input or overflow.
std::uint64_t parse_limit(std::string_view text);

/// Arbitrary-precision variant of parse_limit.
Natural parse_big(std::string_view text);

}  // namespace isosquare::cli
