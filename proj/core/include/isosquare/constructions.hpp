#pragma once

// Constructive families of isosquare numbers (B(n) = B(n^2)) and the weight
// identities behind them. Every function checks its weight postconditions on
// each call and throws InternalInconsistency if one fails; these checks are
// not debug-only.
//
// Bit length convention: k = bit_length(n), so n < 2^k <= 2n.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isosquare/natural.hpp"

namespace isosquare {

/// 2^k - 1, whose square (1_(k-1)0_(k)1) has the same weight k.
/// k < 2 throws InvalidArgument; k = 1 is accepted (returning 1) when
/// allow_trivial is set.
Natural mersenne_member(std::uint64_t k, bool allow_trivial = false);

/// n = 2^k - 2^(k-2) - 2^(k-3) - 4 for k >= 9; n, n+1, n+2, n+3 are all members.
Natural four_tuple(std::uint64_t k);

struct GapInterval {
  Natural lower;  // 2^(2k)
  Natural upper;  // 2^(2k) + 2^k
};

/// Open interval ]2^(2k), 2^(2k) + 2^k[ containing no member. k >= 1.
GapInterval gap_interval(std::uint64_t k);

/// For m = 2^(2k) + r with 0 < r < 2^k: B(m^2) and the value 1 + B(r) + B(r^2)
/// it must equal. Throws PreconditionViolation if r is out of range.
struct GapWeights {
  std::uint64_t square_weight = 0;
  std::uint64_t predicted = 0;
};
GapWeights gap_weight_identity(std::uint64_t k, const Natural& r);

/// 2^(2m+1) + 2^(m+2) - 1, a member within 4 * 2^((2m+1)/2) of 2^(2m+1). m >= 3.
Natural near_power_witness(std::uint64_t m);

/// n (2^nu - 1) for 1 <= n < 2^nu; its weight is exactly nu.
Natural mult_mersenne(const Natural& n, std::uint64_t nu);

/// 2^nu n + 1 for n < 2^(nu-1). Weight B(n) + 1, square weight B(n^2) + B(n) + 1.
Natural affix_one(const Natural& n, std::uint64_t nu);

/// n 2^nu - m for odd n, m with nu >= max(2h - 1, h + k + 1), k and h the bit
/// lengths of n and m. Weight B(n) - B(m) + nu; square weight
/// B(n^2) + B(m^2) - B(mn) + nu - 1.
Natural subtract_compose(const Natural& n, const Natural& m, std::uint64_t nu);

/// 2^nu n - 1 for odd n with defect -1 (B(n^2) = 2B(n) - 1) and nu >= k + 2.
/// The result is a member.
Natural finalize_member(const Natural& n, std::uint64_t nu);

/// n 2^nu - (2^h - 1) for odd n < 2^h - 1 and nu >= 2h + 1. Weight
/// B(n) + nu - h; square weight B(n^2) + nu - 1.
Natural subtract_mersenne(const Natural& n, std::uint64_t h, std::uint64_t nu);

struct NormalizeStep {
  Natural value;
  std::uint64_t h = 0;
  std::uint64_t nu = 0;
};

/// Drives an odd n > 1 with defect >= +1 to defect exactly -1 using
/// h = k + 1 and nu = defect + 2h. Also checks value < n 2^(4k+2).
NormalizeStep normalize_defect_step(const Natural& n);
Natural normalize_defect(const Natural& n);

/// n 2^(3k+3) + 2^(2k+2) + 1, i.e. the bits of n followed by 0_(k) 1 0_(2k+1) 1.
/// Weight B(n) + 2, square weight B(n^2) + 2B(n) + 3, so the defect becomes
/// B(n^2) - 1. n > 1.
Natural inflate(const Natural& n);

enum class Stage { seed, inflate, normalize, finalize };

std::string_view stage_name(Stage stage);

struct TraceStage {
  Stage stage = Stage::seed;
  Natural value;
  std::uint64_t bits = 0;
  std::uint64_t weight = 0;
  std::uint64_t square_weight = 0;
  std::string rule;
};

/// seed -> inflate -> normalize -> finalize, each stage with recorded weights.
struct ConstructionTrace {
  Natural seed;
  std::vector<TraceStage> stages;
  Natural final_value;

  /// Recomputes every recorded weight and checks the chain invariants:
  /// increasing values, seed prefix preserved, member at the end.
  bool verify() const;
};

/// Runs the full chain from `seed`. seed > 1 and not a power of two.
ConstructionTrace construct_one(const Natural& seed);

/// Seeds 2^k + i for i = 1..n with k = bit_length(n).
std::vector<Natural> family_seeds(const Natural& n);

/// One trace per seed, ordered by seed regardless of worker scheduling.
/// n must be odd and > 1. workers = 0 picks the hardware concurrency.
std::vector<ConstructionTrace> construct_family_traces(const Natural& n, unsigned workers = 0);

/// Final values of construct_family_traces: n distinct members.
std::vector<Natural> construct_family(const Natural& n, unsigned workers = 0);

/// max over finals of log2(final) - 40 log2(n), i.e. log2 of the smallest A
/// with final <= A n^40 for every element.
double family_constant_log2(const Natural& n, const std::vector<Natural>& finals);

}  // namespace isosquare
