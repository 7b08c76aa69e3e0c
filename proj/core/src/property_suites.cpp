#include "isosquare/property_suites.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <random>

#include "isosquare/constructions.hpp"
#include "isosquare/digits.hpp"
#include "isosquare/enumeration.hpp"
#include "isosquare/errors.hpp"
#include "isosquare/membership.hpp"

namespace isosquare {

namespace {

constexpr std::size_t kMaxRecordedFailures = 20;
constexpr std::uint64_t kExhaustiveBound = 10'000;

using Rng = std::mt19937_64;

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  // Runs one check; `describe` names the input for the failure message.
  void check(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    ++report_.checks;
    std::string problem;
    try {
      if (body()) return;
      problem = "identity does not hold";
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (report_.failures.size() < kMaxRecordedFailures) {
      report_.failures.push_back(describe() + ": " + problem);
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

Natural random_bits(Rng& rng, std::uint64_t bits) {
  Natural n = 0;
  for (std::uint64_t produced = 0; produced < bits; produced += 64) {
    n <<= 64;
    n += rng();
  }
  n >>= (bits + 63) / 64 * 64 - bits;
  boost::multiprecision::bit_set(n, static_cast<unsigned>(bits - 1));
  return n;
}

Natural random_odd(Rng& rng, std::uint64_t bits) {
  Natural n = random_bits(rng, bits);
  boost::multiprecision::bit_set(n, 0);
  return n;
}

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::uint64_t hw(const Natural& n) { return hamming_weight(n); }

SuiteReport check_mult_mersenne(const SuiteOptions& options) {
  Recorder rec("mult_mersenne");
  Rng rng(options.seed);
  auto one = [&](const Natural& n, std::uint64_t nu) {
    rec.check([&] { return hw(mult_mersenne(n, nu)) == nu; },
              [&] { return "n=" + to_decimal(n) + " nu=" + std::to_string(nu); });
  };
  for (std::uint64_t nu = 1; nu <= 12; ++nu) {
    for (std::uint64_t n = 1; n < (std::uint64_t{1} << nu); ++n) one(n, nu);
  }
  for (std::uint64_t i = 0; i < options.cases; ++i) {
    const auto nu = uniform(rng, 1, 40);
    one(Natural(uniform(rng, 1, (std::uint64_t{1} << nu) - 1)), nu);
  }
  return rec.take();
}

SuiteReport check_affix_one(const SuiteOptions& options) {
  Recorder rec("affix_one");
  Rng rng(options.seed + 1);
  for (std::uint64_t i = 0; i < options.cases; ++i) {
    const auto bits = uniform(rng, 1, 64);
    const Natural n = random_bits(rng, bits);
    const auto nu = bits + 1 + uniform(rng, 0, 20);
    rec.check(
        [&] {
          const Natural r = affix_one(n, nu);
          return hw(r) == hw(n) + 1 && hw(r * r) == hw(n * n) + hw(n) + 1;
        },
        [&] { return "n=" + to_decimal(n) + " nu=" + std::to_string(nu); });
  }
  return rec.take();
}

SuiteReport check_subtract_compose(const SuiteOptions& options) {
  Recorder rec("subtract_compose");
  Rng rng(options.seed + 2);
  for (std::uint64_t i = 0; i < options.cases; ++i) {
    const Natural n = random_odd(rng, uniform(rng, 1, 48));
    const Natural m = random_odd(rng, uniform(rng, 1, 48));
    const auto k = bit_length(n);
    const auto h = bit_length(m);
    const auto nu = std::max(2 * h - 1, h + k + 1) + uniform(rng, 0, 16);
    rec.check(
        [&] {
          const Natural r = subtract_compose(n, m, nu);
          const auto weight = static_cast<std::int64_t>(hw(n)) - static_cast<std::int64_t>(hw(m)) +
                              static_cast<std::int64_t>(nu);
          const auto square = static_cast<std::int64_t>(hw(n * n) + hw(m * m)) -
                              static_cast<std::int64_t>(hw(m * n)) + static_cast<std::int64_t>(nu) - 1;
          return static_cast<std::int64_t>(hw(r)) == weight && static_cast<std::int64_t>(hw(r * r)) == square;
        },
        [&] { return "n=" + to_decimal(n) + " m=" + to_decimal(m) + " nu=" + std::to_string(nu); });
  }
  return rec.take();
}

SuiteReport check_subtract_mersenne(const SuiteOptions& options) {
  Recorder rec("subtract_mersenne");
  Rng rng(options.seed + 3);
  auto one = [&](const Natural& n, std::uint64_t h, std::uint64_t nu) {
    rec.check(
        [&] {
          const Natural r = subtract_mersenne(n, h, nu);
          return hw(r) == hw(n) + nu - h && hw(r * r) == hw(n * n) + nu - 1;
        },
        [&] { return "n=" + to_decimal(n) + " h=" + std::to_string(h) + " nu=" + std::to_string(nu); });
  };
  for (std::uint64_t n = 1; n < 256; n += 2) {
    for (std::uint64_t h = bit_length(n) + 1; h <= 10; ++h) one(n, h, 2 * h + 1);
  }
  for (std::uint64_t i = 0; i < options.cases; ++i) {
    const Natural n = random_odd(rng, uniform(rng, 1, 48));
    const auto h = bit_length(n) + uniform(rng, 1, 8);
    one(n, h, 2 * h + 1 + uniform(rng, 0, 8));
  }
  return rec.take();
}

SuiteReport check_finalize_member(const SuiteOptions& options) {
  Recorder rec("finalize_member");
  Rng rng(options.seed + 4);
  auto one = [&](const Natural& n, std::uint64_t nu) {
    rec.check([&] { return is_isosquare(finalize_member(n, nu)); },
              [&] { return "n=" + to_decimal(n) + " nu=" + std::to_string(nu); });
  };
  for (std::uint64_t n = 1; n <= kExhaustiveBound; n += 2) {
    if (square_defect(n) != -1) continue;
    const auto k = bit_length(n);
    one(n, k + 2);
    one(n, k + 5);
  }
  std::uint64_t found = 0;
  for (std::uint64_t attempt = 0; found < options.cases && attempt < 200 * options.cases; ++attempt) {
    const Natural n = random_odd(rng, uniform(rng, 1, 40));
    if (square_defect(n) != -1) continue;
    ++found;
    one(n, bit_length(n) + 2 + uniform(rng, 0, 8));
  }
  if (found < options.cases) {
    rec.check([] { return false; }, [&] { return "only " + std::to_string(found) + " admissible random inputs"; });
  }
  return rec.take();
}

SuiteReport check_normalize_defect(const SuiteOptions& options) {
  Recorder rec("normalize_defect");
  Rng rng(options.seed + 5);
  auto one = [&](const Natural& n) {
    rec.check(
        [&] {
          const Natural r = normalize_defect(n);
          return hw(r * r) == 2 * hw(r) - 1;
        },
        [&] { return "n=" + to_decimal(n); });
  };
  for (std::uint64_t n = 3; n <= kExhaustiveBound; n += 2) {
    if (square_defect(n) >= 1) one(n);
  }
  std::uint64_t found = 0;
  for (std::uint64_t attempt = 0; found < options.cases && attempt < 200 * options.cases; ++attempt) {
    const Natural n = random_odd(rng, uniform(rng, 2, 64));
    if (square_defect(n) < 1) continue;
    ++found;
    one(n);
  }
  if (found < options.cases) {
    rec.check([] { return false; }, [&] { return "only " + std::to_string(found) + " admissible random inputs"; });
  }
  return rec.take();
}

SuiteReport check_inflate(const SuiteOptions& options) {
  Recorder rec("inflate");
  Rng rng(options.seed + 6);
  auto one = [&](const Natural& n) {
    rec.check(
        [&] {
          const Natural r = inflate(n);
          const auto sq = hw(n * n);
          const bool identities = hw(r) == hw(n) + 2 && hw(r * r) == sq + 2 * hw(n) + 3;
          const bool strict = sq < 3 || hw(r * r) > 2 * hw(r) + 1;
          return identities && strict;
        },
        [&] { return "n=" + to_decimal(n); });
  };
  for (std::uint64_t n = 2; n <= kExhaustiveBound; ++n) one(n);
  for (std::uint64_t i = 0; i < options.cases; ++i) one(random_bits(rng, uniform(rng, 2, 64)));
  return rec.take();
}

SuiteReport check_gaps() {
  Recorder rec("gaps");
  for (unsigned k = 1; k <= 10; ++k) {
    rec.check([&] { return scan_gap(k); }, [&] { return "scan_gap k=" + std::to_string(k); });
    for (std::uint64_t r = 1; r < (std::uint64_t{1} << k); ++r) {
      rec.check(
          [&] {
            const auto weights = gap_weight_identity(k, r);
            return weights.square_weight == weights.predicted;
          },
          [&] { return "gap identity k=" + std::to_string(k) + " r=" + std::to_string(r); });
    }
  }
  return rec.take();
}

SuiteReport check_tuples() {
  Recorder rec("tuples");
  for (std::uint64_t k = 9; k <= 40; ++k) {
    rec.check(
        [&] {
          const Natural n = four_tuple(k);
          for (int i = 0; i < 4; ++i) {
            if (!is_isosquare(Natural(n + i))) return false;
          }
          return true;
        },
        [&] { return "four_tuple k=" + std::to_string(k); });
  }
  return rec.take();
}

SuiteReport check_mersenne() {
  Recorder rec("mersenne");
  for (std::uint64_t k = 2; k <= 256; ++k) {
    rec.check(
        [&] {
          const Natural n = mersenne_member(k);
          return n == pow2(k) - 1 && is_isosquare(n) && hw(n * n) == k;
        },
        [&] { return "mersenne_member k=" + std::to_string(k); });
  }
  for (std::uint64_t m = 3; m <= 128; ++m) {
    rec.check([&] { return is_isosquare(near_power_witness(m)); },
              [&] { return "near_power_witness m=" + std::to_string(m); });
  }
  return rec.take();
}

}  // namespace

std::vector<std::string_view> suite_names() { return {"lemmas", "gaps", "tuples", "mersenne"}; }

std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options) {
  std::vector<SuiteReport> reports;
  const bool all = name == "all";
  bool known = all;
  if (all || name == "lemmas") {
    known = true;
    reports.push_back(check_mult_mersenne(options));
    reports.push_back(check_affix_one(options));
    reports.push_back(check_subtract_compose(options));
    reports.push_back(check_subtract_mersenne(options));
    reports.push_back(check_finalize_member(options));
    reports.push_back(check_normalize_defect(options));
    reports.push_back(check_inflate(options));
  }
  if (all || name == "gaps") {
    known = true;
    reports.push_back(check_gaps());
  }
  if (all || name == "tuples") {
    known = true;
    reports.push_back(check_tuples());
  }
  if (all || name == "mersenne") {
    known = true;
    reports.push_back(check_mersenne());
  }
  if (!known) throw InvalidArgument("unknown property suite '" + std::string(name) + "'");
  return reports;
}

}  // namespace isosquare
