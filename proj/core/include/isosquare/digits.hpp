#pragma once

// Digit sums and the run-length bit-pattern notation, e.g. (1_(k)0_(h)1_(l)010).

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isosquare/natural.hpp"

namespace isosquare {

/// Double-word unsigned integer (GCC/Clang extension).
__extension__ using UInt128 = unsigned __int128;

/// Number of 1-bits. This is the fast path used by the sieve.
constexpr std::uint64_t hamming_weight(std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>(std::popcount(n));
}

/// Hamming weight of a double-word value.
constexpr std::uint64_t hamming_weight_u128(UInt128 n) noexcept {
  return hamming_weight(static_cast<std::uint64_t>(n)) +
         hamming_weight(static_cast<std::uint64_t>(n >> 64));
}

/// Hamming weight of an arbitrary-precision value (limb popcount).
std::uint64_t hamming_weight(const Natural& n);

/// Position of the highest set bit plus one; 0 for n = 0. Satisfies
/// n < 2^k <= 2n for n >= 1.
std::uint64_t bit_length(const Natural& n);

/// Sum of the digits of n written in `base`. base < 2 throws InvalidArgument.
std::uint64_t digit_sum(const Natural& n, unsigned base);

/// 2^k - n - 1, the bitwise flip of n inside a k-bit window.
/// Throws PreconditionViolation unless n < 2^k.
Natural complement(const Natural& n, std::uint64_t k);

struct Run {
  std::uint8_t digit = 0;    // 0 or 1
  std::uint64_t length = 0;  // >= 1

  bool operator==(const Run&) const = default;
};

/// A binary string held as maximal runs, most-significant run first.
///
/// Leading zero runs are allowed, so (011) is a valid pattern for 3. The
/// empty pattern represents zero. Construction rejects non-canonical input:
/// zero-length runs, digits other than 0/1, or two adjacent runs with the same
/// digit.
class BitPattern {
 public:
  BitPattern() = default;
  explicit BitPattern(std::vector<Run> runs);

  /// Parses a plain bit string such as "011" (leading zeros kept).
  static BitPattern from_bits(std::string_view bits);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }

  /// Total number of binary digits represented, leading zeros included.
  std::uint64_t digit_count() const noexcept;

  /// Number of 1-digits; equals hamming_weight(pattern_to_value(*this)).
  std::uint64_t weight() const noexcept;

  /// Compact notation: "1_(3)0_(2)1". Runs of length one print bare.
  std::string to_string() const;

  /// Plain bit string, leading zeros kept. "0" is not produced for zero;
  /// the empty pattern renders as "".
  std::string to_bits() const;

  bool operator==(const BitPattern&) const = default;

 private:
  std::vector<Run> runs_;
};

Natural pattern_to_value(const BitPattern& pattern);

/// Canonical pattern without a leading zero run; zero maps to the empty pattern.
BitPattern value_to_pattern(const Natural& n);

}  // namespace isosquare
