#pragma once

#include <cstdint>

#include "isosquare/digits.hpp"
#include "isosquare/natural.hpp"

namespace isosquare {

/// Parameters (k, l, m) of the digit-sum property: the base-k digit sum of n
/// equals l times the base-k digit sum of n^m. Requires k >= 2, l >= 1, m >= 2.
class PropertyTriple {
 public:
  PropertyTriple(unsigned base, unsigned multiplier, unsigned power);

  /// (2, 1, 2): B(n) = B(n^2).
  static PropertyTriple isosquare() { return {2, 1, 2}; }

  unsigned base() const noexcept { return base_; }
  unsigned multiplier() const noexcept { return multiplier_; }
  unsigned power() const noexcept { return power_; }

  bool operator==(const PropertyTriple&) const = default;

 private:
  unsigned base_;
  unsigned multiplier_;
  unsigned power_;
};

/// True iff digit_sum(n, k) == l * digit_sum(n^m, k). n^m is exact.
/// n = 0 throws InvalidArgument.
bool satisfies(const Natural& n, const PropertyTriple& triple);

namespace detail {

/// B(n) == B(n^2) without argument checks. Squares above 2^64 go through
/// 128-bit arithmetic.
constexpr bool isosquare_word(std::uint64_t n) noexcept {
  if (n <= 0xFFFF'FFFFull) return hamming_weight(n) == hamming_weight(n * n);
  const auto wide = static_cast<UInt128>(n);
  return hamming_weight(n) == hamming_weight_u128(wide * wide);
}

}  // namespace detail

/// B(n) == B(n^2). n = 0 throws InvalidArgument.
bool is_isosquare(std::uint64_t n);
bool is_isosquare(const Natural& n);

/// B(n), B(n^2) and the signed defect B(n^2) - 2 B(n).
struct WeightProfile {
  Natural n;
  std::uint64_t weight = 0;
  std::uint64_t square_weight = 0;
  std::int64_t defect = 0;

  bool isosquare() const noexcept { return weight == square_weight; }
};

WeightProfile weight_profile(const Natural& n);

/// B(n^2) - 2 B(n).
std::int64_t square_defect(const Natural& n);

/// B(n^m) / B(n) as a normalized exact rational. Requires n >= 1, m >= 2.
Rational stolarsky_ratio(const Natural& n, unsigned m);

}  // namespace isosquare
