#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isosquare/enumeration.hpp"
#include "isosquare/natural.hpp"

namespace isosquare {

/// Exact C(n, k); 0 when k > n.
Natural binomial(std::uint64_t n, std::uint64_t k);

/// ln C(n, k) through lgamma. Intended for arguments far beyond the exact range.
double log_binomial(std::uint64_t n, std::uint64_t k);

/// Model probability that n in [2^k, 2^(k+1)) is a member with B(n) = l,
/// treating B(n) - 1 ~ b(k, 1/2) and B(n^2) - 1 ~ b(2k or 2k+1, 1/2) as
/// independent: [C(2k, l) + C(2k+1, l)] / (3 * 2^(2k)).
/// Requires k >= 1 and 0 <= l <= k + 1.
Rational model_probability(std::uint64_t k, std::uint64_t l);

/// log(27/16) / log 2 = 0.75488750...
double alpha_theoretical();

/// -2 + log2(sum_l C(k,l) C(2k,l)) / k. The sum is C(3k, k); it is evaluated
/// exactly for k <= exact_alpha_limit and through lgamma above.
double alpha_limit(std::uint64_t k);
inline constexpr std::uint64_t exact_alpha_limit = 60;

/// Least-squares line through (ln n, ln count).
struct FitResult {
  double alpha_hat = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  std::size_t sample_count = 0;
};

/// Ordinary least squares of ln(count) against ln(n), no log correction.
/// Samples with count = 0 or n < 2 are skipped; fewer than two usable samples
/// (or all at the same n) throw InvalidArgument.
FitResult fit_exponent(std::span<const CountSample> samples);

struct ProfilePoint {
  std::uint64_t n = 0;
  double log2n = 0.0;
  double value = 0.0;       // p(n) ln(n) / n^alpha
  bool empty_count = false;  // p(n) = 0, value forced to 0
};

/// p(n) ln(n) / n^alpha per sample, in input order. alpha must be positive.
std::vector<ProfilePoint> fluctuation_profile(std::span<const CountSample> samples, double alpha);

/// round(start * ratio^j) for j = 0, 1, ... while <= limit, deduplicated.
/// Requires start >= 1 and ratio > 1.
std::vector<std::uint64_t> geometric_grid(double start, double ratio, std::uint64_t limit);

/// Default profile grid: powers of 2^(1/4) from `min_n` up to limit.
std::vector<std::uint64_t> profile_grid(std::uint64_t limit, std::uint64_t min_n = 1024);

/// Default fit grid: n = j * limit / points for j = 1..points, keeping n >= min_n.
std::vector<std::uint64_t> uniform_grid(std::uint64_t limit, std::size_t points = 1000,
                                        std::uint64_t min_n = 1024);

/// Strict local extrema (sign changes of consecutive differences, plateaus skipped).
std::size_t count_local_extrema(std::span<const ProfilePoint> profile);

}  // namespace isosquare
