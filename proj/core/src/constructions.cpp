#include "isosquare/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "isosquare/digits.hpp"
#include "isosquare/errors.hpp"
#include "isosquare/membership.hpp"

namespace isosquare {

namespace {

void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalInconsistency(what);
}

void ensure_weight(const char* op, const char* quantity, std::uint64_t actual, std::uint64_t expected) {
  if (actual != expected) {
    throw InternalInconsistency(std::string(op) + ": " + quantity + " is " + std::to_string(actual) +
                                ", identity predicts " + std::to_string(expected));
  }
}

void require(bool condition, const std::string& rule) {
  if (!condition) throw PreconditionViolation(rule);
}

bool is_odd(const Natural& n) { return boost::multiprecision::bit_test(n, 0); }

bool is_power_of_two(const Natural& n) { return n > 0 && hamming_weight(n) == 1; }

// Signed weight arithmetic, checked to land on a non-negative count.
std::uint64_t as_weight(std::int64_t value, const char* op) {
  ensure(value >= 0, std::string(op) + ": negative predicted weight");
  return static_cast<std::uint64_t>(value);
}

std::int64_t w(const Natural& n) { return static_cast<std::int64_t>(hamming_weight(n)); }

}  // namespace

Natural mersenne_member(std::uint64_t k, bool allow_trivial) {
  if (k == 0 || (k == 1 && !allow_trivial)) {
    throw InvalidArgument("mersenne_member: k must be >= 2 (k=1 gives the trivial member 1)");
  }
  Natural n = pow2(k) - 1;
  ensure_weight("mersenne_member", "weight", hamming_weight(n), k);
  ensure_weight("mersenne_member", "square weight", hamming_weight(n * n), k);
  return n;
}

Natural four_tuple(std::uint64_t k) {
  if (k < 9) throw InvalidArgument("four_tuple: k must be >= 9");
  Natural n = pow2(k) - pow2(k - 2) - pow2(k - 3) - 4;
  for (int offset = 0; offset < 4; ++offset) {
    ensure(is_isosquare(Natural(n + offset)),
           "four_tuple: n+" + std::to_string(offset) + " is not a member for k=" + std::to_string(k));
  }
  return n;
}

GapInterval gap_interval(std::uint64_t k) {
  if (k == 0) throw InvalidArgument("gap_interval: k must be >= 1");
  Natural lower = pow2(2 * k);
  Natural upper = lower + pow2(k);
  return {std::move(lower), std::move(upper)};
}

GapWeights gap_weight_identity(std::uint64_t k, const Natural& r) {
  if (k == 0) throw InvalidArgument("gap_weight_identity: k must be >= 1");
  require(r > 0 && bit_length(r) <= k, "gap_weight_identity: r must satisfy 0 < r < 2^k");
  const Natural m = pow2(2 * k) + r;
  return {hamming_weight(m * m), 1 + hamming_weight(r) + hamming_weight(r * r)};
}

Natural near_power_witness(std::uint64_t m) {
  if (m < 3) throw InvalidArgument("near_power_witness: m must be >= 3");
  const Natural base = pow2(2 * m + 1);
  Natural n = base + pow2(m + 2) - 1;
  ensure(is_isosquare(n), "near_power_witness: result is not a member");
  // offset <= 4 * 2^((2m+1)/2)  <=>  offset^2 <= 2^(2m+5)
  const Natural offset = n - base;
  ensure(offset * offset <= pow2(2 * m + 5), "near_power_witness: result outside the window");
  return n;
}

Natural mult_mersenne(const Natural& n, std::uint64_t nu) {
  require_non_negative(n, "n");
  require(n >= 1 && bit_length(n) <= nu, "mult_mersenne: requires 1 <= n < 2^nu");
  Natural result = n * (pow2(nu) - 1);
  ensure_weight("mult_mersenne", "weight", hamming_weight(result), nu);
  return result;
}

Natural affix_one(const Natural& n, std::uint64_t nu) {
  require_non_negative(n, "n");
  require(n >= 1, "affix_one: requires n >= 1");
  require(nu >= 1 && bit_length(n) <= nu - 1, "affix_one: requires n < 2^(nu-1)");
  Natural result = (n << nu) + 1;
  const auto weight = hamming_weight(n);
  ensure_weight("affix_one", "weight", hamming_weight(result), weight + 1);
  ensure_weight("affix_one", "square weight", hamming_weight(result * result),
                hamming_weight(n * n) + weight + 1);
  return result;
}

Natural subtract_compose(const Natural& n, const Natural& m, std::uint64_t nu) {
  require_non_negative(n, "n");
  require_non_negative(m, "m");
  require(is_odd(n), "subtract_compose: n must be odd");
  require(is_odd(m), "subtract_compose: m must be odd");
  const auto k = bit_length(n);
  const auto h = bit_length(m);
  require(nu >= std::max(2 * h - 1, h + k + 1), "subtract_compose: requires nu >= max(2h-1, h+k+1)");

  Natural result = (n << nu) - m;
  const auto weight = as_weight(w(n) - w(m) + static_cast<std::int64_t>(nu), "subtract_compose");
  const auto square_weight = as_weight(
      w(n * n) + w(m * m) - w(m * n) + static_cast<std::int64_t>(nu) - 1, "subtract_compose");
  ensure_weight("subtract_compose", "weight", hamming_weight(result), weight);
  ensure_weight("subtract_compose", "square weight", hamming_weight(result * result), square_weight);
  return result;
}

Natural finalize_member(const Natural& n, std::uint64_t nu) {
  require_non_negative(n, "n");
  require(is_odd(n), "finalize_member: n must be odd");
  require(square_defect(n) == -1, "finalize_member: requires B(n^2) = 2B(n) - 1");
  require(nu >= bit_length(n) + 2, "finalize_member: requires nu >= k + 2");
  Natural result = subtract_compose(n, 1, nu);
  ensure(is_isosquare(result), "finalize_member: result is not a member");
  return result;
}

Natural subtract_mersenne(const Natural& n, std::uint64_t h, std::uint64_t nu) {
  require_non_negative(n, "n");
  require(is_odd(n), "subtract_mersenne: n must be odd");
  require(h >= 1 && n < pow2(h) - 1, "subtract_mersenne: requires n < 2^h - 1");
  require(nu >= 2 * h + 1, "subtract_mersenne: requires nu >= 2h + 1");

  const Natural mersenne = pow2(h) - 1;
  Natural result = subtract_compose(n, mersenne, nu);
  const auto hi = static_cast<std::int64_t>(h);
  const auto nui = static_cast<std::int64_t>(nu);
  ensure_weight("subtract_mersenne", "weight", hamming_weight(result),
                as_weight(w(n) + nui - hi, "subtract_mersenne"));
  ensure_weight("subtract_mersenne", "square weight", hamming_weight(result * result),
                as_weight(w(n * n) + nui - 1, "subtract_mersenne"));
  return result;
}

NormalizeStep normalize_defect_step(const Natural& n) {
  require_non_negative(n, "n");
  require(n > 1, "normalize_defect: requires n > 1");
  require(is_odd(n), "normalize_defect: n must be odd");
  const auto defect = square_defect(n);
  require(defect >= 1, "normalize_defect: requires B(n^2) >= 2B(n) + 1");

  const auto k = bit_length(n);
  NormalizeStep step;
  step.h = k + 1;
  step.nu = static_cast<std::uint64_t>(defect) + 2 * step.h;
  step.value = subtract_mersenne(n, step.h, step.nu);
  ensure(square_defect(step.value) == -1, "normalize_defect: result defect is not -1");
  ensure(step.value < (n << (4 * k + 2)), "normalize_defect: result exceeds n 2^(4k+2)");
  return step;
}

Natural normalize_defect(const Natural& n) { return normalize_defect_step(n).value; }

Natural inflate(const Natural& n) {
  require_non_negative(n, "n");
  if (n <= 1) throw InvalidArgument("inflate: requires n > 1");
  const auto k = bit_length(n);
  // Two affix-one steps: n -> 2^(k+1) n + 1 -> 2^(2k+2) (2^(k+1) n + 1) + 1.
  const Natural once = affix_one(n, k + 1);
  Natural result = affix_one(once, 2 * k + 2);
  ensure(result == (n << (3 * k + 3)) + pow2(2 * k + 2) + 1, "inflate: pattern mismatch");

  const auto weight = hamming_weight(n);
  const auto square_weight = hamming_weight(n * n);
  const auto result_weight = hamming_weight(result);
  const auto result_square_weight = hamming_weight(result * result);
  ensure_weight("inflate", "weight", result_weight, weight + 2);
  ensure_weight("inflate", "square weight", result_square_weight, square_weight + 2 * weight + 3);
  if (square_weight >= 2) {
    ensure(result_square_weight >= 2 * result_weight + 1, "inflate: defect below +1");
  }
  if (square_weight >= 3) {
    ensure(result_square_weight > 2 * result_weight + 1, "inflate: defect not strictly above +1");
  }
  return result;
}

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::seed: return "seed";
    case Stage::inflate: return "inflate";
    case Stage::normalize: return "normalize";
    case Stage::finalize: return "finalize";
  }
  return "unknown";
}

namespace {

TraceStage make_stage(Stage stage, const Natural& value, std::string rule) {
  TraceStage record;
  record.stage = stage;
  record.value = value;
  record.bits = bit_length(value);
  record.weight = hamming_weight(value);
  record.square_weight = hamming_weight(value * value);
  record.rule = std::move(rule);
  return record;
}

bool keeps_prefix(const Natural& value, const Natural& prefix) {
  const auto value_bits = bit_length(value);
  const auto prefix_bits = bit_length(prefix);
  if (value_bits < prefix_bits) return false;
  return (value >> (value_bits - prefix_bits)) == prefix;
}

}  // namespace

bool ConstructionTrace::verify() const {
  if (stages.empty() || stages.front().value != seed) return false;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& s = stages[i];
    if (s.bits != bit_length(s.value) || s.weight != hamming_weight(s.value) ||
        s.square_weight != hamming_weight(s.value * s.value)) {
      return false;
    }
    if (i > 0 && !(stages[i - 1].value < s.value)) return false;
    if (!keeps_prefix(s.value, seed)) return false;
  }
  const auto& last = stages.back();
  return last.stage == Stage::finalize && last.value == final_value && last.weight == last.square_weight;
}

ConstructionTrace construct_one(const Natural& seed) {
  require_non_negative(seed, "seed");
  if (seed <= 1) throw InvalidArgument("construct_one: seed must be > 1");
  if (is_power_of_two(seed)) throw InvalidArgument("construct_one: seed is a power of two");

  ConstructionTrace trace;
  trace.seed = seed;
  trace.stages.push_back(make_stage(Stage::seed, seed, "input"));

  const Natural inflated = inflate(seed);
  trace.stages.push_back(make_stage(Stage::inflate, inflated, "affix_one x2"));

  const NormalizeStep normalized = normalize_defect_step(inflated);
  trace.stages.push_back(make_stage(
      Stage::normalize, normalized.value,
      "subtract_mersenne h=" + std::to_string(normalized.h) + " nu=" + std::to_string(normalized.nu)));

  const auto nu = bit_length(normalized.value) + 2;
  trace.final_value = finalize_member(normalized.value, nu);
  trace.stages.push_back(
      make_stage(Stage::finalize, trace.final_value, "finalize_member nu=" + std::to_string(nu)));

  if (!trace.verify()) {
    throw InternalInconsistency("construct_one: trace invariants fail for seed " + to_decimal(seed));
  }
  return trace;
}

std::vector<Natural> family_seeds(const Natural& n) {
  require_non_negative(n, "n");
  if (bit_length(n) > 32) throw InvalidArgument("family size too large");
  const auto count = n.convert_to<std::uint64_t>();
  const Natural base = pow2(bit_length(n));
  std::vector<Natural> seeds;
  seeds.reserve(count);
  // 2^k + i with 1 <= i <= n < 2^k never hits a power of two. Should one
  // appear anyway, the next unused value past 2^k + n replaces it.
  Natural spare = base + n + 1;
  for (std::uint64_t i = 1; i <= count; ++i) {
    Natural seed = base + i;
    if (is_power_of_two(seed)) {
      while (is_power_of_two(spare)) ++spare;
      seed = spare++;
    }
    seeds.push_back(std::move(seed));
  }
  return seeds;
}

std::vector<ConstructionTrace> construct_family_traces(const Natural& n, unsigned workers) {
  require_non_negative(n, "n");
  if (n <= 1) throw InvalidArgument("construct_family: n must be > 1");
  if (!is_odd(n)) throw InvalidArgument("construct_family: n must be odd");

  const std::vector<Natural> seeds = family_seeds(n);
  std::vector<ConstructionTrace> traces(seeds.size());

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, seeds.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        traces[i] = construct_one(seeds[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::set<Natural> distinct;
  for (const auto& trace : traces) distinct.insert(trace.final_value);
  ensure(distinct.size() == traces.size(), "construct_family: finals are not pairwise distinct");
  return traces;
}

std::vector<Natural> construct_family(const Natural& n, unsigned workers) {
  std::vector<Natural> finals;
  for (auto& trace : construct_family_traces(n, workers)) finals.push_back(std::move(trace.final_value));
  return finals;
}

double family_constant_log2(const Natural& n, const std::vector<Natural>& finals) {
  if (finals.empty()) throw InvalidArgument("family_constant_log2: no finals");
  double worst = -1e300;
  for (const auto& f : finals) worst = std::max(worst, log2_natural(f));
  return worst - 40.0 * log2_natural(n);
}

}  // namespace isosquare
