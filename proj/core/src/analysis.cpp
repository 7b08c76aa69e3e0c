#include "isosquare/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isosquare/digits.hpp"
#include "isosquare/errors.hpp"

namespace isosquare {

Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Natural result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw InvalidArgument("log_binomial: k > n");
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
}

Rational model_probability(std::uint64_t k, std::uint64_t l) {
  if (k < 1) throw InvalidArgument("model_probability: k must be >= 1");
  if (l > k + 1) throw InvalidArgument("model_probability: l must lie in [0, k+1]");
  const Natural numerator = binomial(2 * k, l) + binomial(2 * k + 1, l);
  return Rational(numerator, 3 * pow2(2 * k));
}

double alpha_theoretical() { return std::log(27.0 / 16.0) / std::numbers::ln2; }

double alpha_limit(std::uint64_t k) {
  if (k < 1) throw InvalidArgument("alpha_limit: k must be >= 1");
  double log_sum = 0.0;
  if (k <= exact_alpha_limit) {
    log_sum = std::log(binomial(3 * k, k).convert_to<double>());
  } else {
    log_sum = log_binomial(3 * k, k);
  }
  return -2.0 + log_sum / (static_cast<double>(k) * std::numbers::ln2);
}

FitResult fit_exponent(std::span<const CountSample> samples) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& s : samples) {
    if (s.count == 0 || s.n < 2) continue;
    xs.push_back(std::log(static_cast<double>(s.n)));
    ys.push_back(std::log(static_cast<double>(s.count)));
  }
  if (xs.size() < 2) throw InvalidArgument("fit_exponent: need at least 2 samples with n >= 2 and count >= 1");

  const auto count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw InvalidArgument("fit_exponent: all samples share the same n");

  FitResult fit;
  fit.alpha_hat = sxy / sxx;
  fit.intercept = mean_y - fit.alpha_hat * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.alpha_hat * xs[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / count);
  fit.sample_count = xs.size();
  return fit;
}

std::vector<ProfilePoint> fluctuation_profile(std::span<const CountSample> samples, double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("fluctuation_profile: alpha must be positive");
  std::vector<ProfilePoint> profile;
  profile.reserve(samples.size());
  for (const auto& s : samples) {
    ProfilePoint point;
    point.n = s.n;
    const auto n = static_cast<double>(s.n);
    point.log2n = s.n > 0 ? std::log2(n) : 0.0;
    point.empty_count = s.count == 0;
    if (!point.empty_count && s.n >= 2) {
      point.value = static_cast<double>(s.count) * std::log(n) / std::pow(n, alpha);
    }
    profile.push_back(point);
  }
  return profile;
}

std::vector<std::uint64_t> geometric_grid(double start, double ratio, std::uint64_t limit) {
  if (!(start >= 1.0)) throw InvalidArgument("geometric grid: start must be >= 1");
  if (!(ratio > 1.0)) throw InvalidArgument("geometric grid: ratio must be > 1");
  std::vector<std::uint64_t> grid;
  const auto top = static_cast<double>(limit);
  for (double x = start; std::round(x) <= top; x *= ratio) {
    const auto point = static_cast<std::uint64_t>(std::llround(x));
    if (grid.empty() || point > grid.back()) grid.push_back(point);
  }
  return grid;
}

std::vector<std::uint64_t> profile_grid(std::uint64_t limit, std::uint64_t min_n) {
  // Exact powers 2^(j/4) avoid drift from repeated multiplication.
  std::vector<std::uint64_t> grid;
  const double first = std::ceil(4.0 * std::log2(static_cast<double>(std::max<std::uint64_t>(min_n, 1))) - 1e-9);
  for (double j = first;; j += 1.0) {
    const double x = std::round(std::exp2(j / 4.0));
    if (x > static_cast<double>(limit)) break;
    const auto point = static_cast<std::uint64_t>(x);
    if (point < min_n) continue;
    if (grid.empty() || point > grid.back()) grid.push_back(point);
  }
  return grid;
}

std::vector<std::uint64_t> uniform_grid(std::uint64_t limit, std::size_t points, std::uint64_t min_n) {
  if (points == 0) throw InvalidArgument("uniform grid: needs at least one point");
  std::vector<std::uint64_t> grid;
  for (std::size_t j = 1; j <= points; ++j) {
    const auto point = static_cast<std::uint64_t>(
        static_cast<UInt128>(limit) * j / points);
    if (point < min_n || point == 0) continue;
    if (grid.empty() || point > grid.back()) grid.push_back(point);
  }
  return grid;
}

std::size_t count_local_extrema(std::span<const ProfilePoint> profile) {
  std::size_t extrema = 0;
  int previous_direction = 0;
  for (std::size_t i = 1; i < profile.size(); ++i) {
    const double delta = profile[i].value - profile[i - 1].value;
    const int direction = (delta > 0) - (delta < 0);
    if (direction == 0) continue;
    if (previous_direction != 0 && direction != previous_direction) ++extrema;
    previous_direction = direction;
  }
  return extrema;
}

}  // namespace isosquare
