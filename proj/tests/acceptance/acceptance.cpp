// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and thresholds are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "isosquare/analysis.hpp"
#include "isosquare/constructions.hpp"
#include "isosquare/digits.hpp"
#include "isosquare/enumeration.hpp"
#include "isosquare/membership.hpp"
#include "support/oracle.hpp"

using namespace isosquare;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (passed) detail << "first failure: " << what << "; ";
      passed = false;
    }
  }
};

int failures = 0;

void criterion(const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.passed = false;
    outcome.detail << "exception: " << e.what() << "; ";
  }
  std::cout << (outcome.passed ? "PASS " : "FAIL ") << name << " (" << outcome.detail.str() << "elapsed "
            << seconds_since(start) << " s)" << std::endl;
  if (!outcome.passed) ++failures;
}

unsigned oracle_weight(const Natural& n) { return oracle::binary_weight(to_decimal(n)); }

unsigned oracle_square_weight(const Natural& n) {
  const auto d = to_decimal(n);
  return oracle::binary_weight(oracle::multiply(d, d));
}

bool oracle_member(const Natural& n) { return oracle_weight(n) == oracle_square_weight(n); }

Natural random_bits(std::mt19937_64& rng, unsigned bits) {
  Natural n = 0;
  for (unsigned i = 0; i < bits; ++i) n = (n << 1) | (rng() & 1);
  boost::multiprecision::bit_set(n, bits - 1);
  return n;
}

Natural random_odd(std::mt19937_64& rng, unsigned bits) {
  Natural n = random_bits(rng, bits);
  boost::multiprecision::bit_set(n, 0);
  return n;
}

unsigned uniform(std::mt19937_64& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

std::int64_t oracle_defect(const Natural& n) {
  return static_cast<std::int64_t>(oracle_square_weight(n)) - 2 * static_cast<std::int64_t>(oracle_weight(n));
}

double read_log2_a() {
  std::ifstream in(std::string(ISOSQUARE_FIXTURE_DIR) + "/chain_constant.txt");
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("log2_A ", 0) == 0) return std::stod(line.substr(7));
  }
  throw std::runtime_error("chain_constant.txt has no log2_A entry");
}

struct AnalyzeRun {
  int code = -1;
  double alpha_hat = std::nan("");
  double seconds = 0;
};

AnalyzeRun run_analyze(const std::string& limit, const std::filesystem::path& profile_out) {
  std::ostringstream out;
  std::ostringstream err;
  std::vector<std::string> args{"analyze", "--limit", limit, "--alpha", "theoretical"};
  if (!profile_out.empty()) {
    args.push_back("--out");
    args.push_back(profile_out.string());
  }
  AnalyzeRun run;
  const auto start = Clock::now();
  run.code = cli::run(args, out, err);
  run.seconds = seconds_since(start);
  std::istringstream lines(out.str());
  for (std::string key; lines >> key;) {
    double value = 0;
    lines >> value;
    if (key == "alpha_hat") run.alpha_hat = value;
  }
  return run;
}

}  // namespace

int main() {
  std::cout << std::setprecision(10);

  criterion("[1] oracle equivalence: sieve(10^5) == naive enumerator, sequential < 5 s", [](Outcome& o) {
    SieveOptions sequential;
    sequential.workers = 1;
    const auto start = Clock::now();
    const auto members = sieve(100000, sequential);
    const double elapsed = seconds_since(start);
    const auto naive = oracle::enumerate(100000);
    o.require(members == naive, "sieve differs from oracle");
    o.require(elapsed < 5.0, "sieve took " + std::to_string(elapsed) + " s");
    o.detail << members.size() << " members, sieve " << elapsed << " s; ";
  });

  criterion("[2] fixture memberships: 1..4, 316..319, second 4-run at 316, 2^k-1 for k=2..30", [](Outcome& o) {
    for (std::uint64_t m : {1, 2, 3, 4, 316, 317, 318, 319}) {
      o.require(is_isosquare(m) && oracle::isosquare(m), std::to_string(m) + " not a member");
    }
    const auto runs = find_runs(400, 4);
    o.require(runs.size() >= 2, "fewer than two 4-runs below 400");
    if (runs.size() >= 2) {
      o.require(runs[0].start == 1, "first 4-run does not start at 1");
      o.require(runs[1].start == 316, "second 4-run does not start at 316");
    }
    for (std::uint64_t s = 5; s + 3 <= 315; ++s) {
      bool all = true;
      for (std::uint64_t i = 0; i < 4; ++i) all = all && oracle::isosquare(s + i);
      o.require(!all, "unexpected 4-run at " + std::to_string(s));
    }
    for (std::uint64_t k = 2; k <= 30; ++k) {
      const std::uint64_t n = (std::uint64_t{1} << k) - 1;
      o.require(is_isosquare(n) && oracle::isosquare(n), "2^" + std::to_string(k) + "-1 not a member");
    }
  });

  criterion("[3] p(17) = 11 from the oracle list; counting == sieve on 100 random grid points <= 10^6",
            [](Outcome& o) {
              const auto list = oracle::enumerate(16);
              o.require(list == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 7, 8, 12, 14, 15, 16}, "oracle list");
              const std::vector<std::uint64_t> g17{17};
              const auto p17 = counting(17, g17);
              o.require(p17.size() == 1 && p17[0].count == 11 && list.size() == 11, "p(17) != 11");

              const std::uint64_t limit = 1'000'000;
              const auto members = sieve(limit);
              std::mt19937_64 rng(2024);
              std::set<std::uint64_t> points;
              while (points.size() < 100) points.insert(1 + rng() % limit);
              const std::vector<std::uint64_t> grid(points.begin(), points.end());
              for (const auto& s : counting(limit, grid)) {
                const auto expected = static_cast<std::uint64_t>(
                    std::lower_bound(members.begin(), members.end(), s.n) - members.begin());
                o.require(s.count == expected, "p(" + std::to_string(s.n) + ") mismatch");
              }
            });

  criterion("[4] lemma suites, exact, 10^4 random admissible cases each + exhaustive ranges, < 60 s",
            [](Outcome& o) {
              const auto start = Clock::now();
              std::mt19937_64 rng(404);
              constexpr int kCases = 10'000;
              std::uint64_t checks = 0;
              auto check = [&](bool ok, const std::string& what) {
                ++checks;
                o.require(ok, what);
              };

              // mult_mersenne: exhaustive nu <= 12, random nu <= 40
              for (std::uint64_t nu = 1; nu <= 12; ++nu) {
                for (std::uint64_t n = 1; n < (std::uint64_t{1} << nu); ++n) {
                  check(hamming_weight(mult_mersenne(n, nu)) == nu, "mult_mersenne exhaustive");
                }
              }
              for (int i = 0; i < kCases; ++i) {
                const unsigned nu = uniform(rng, 1, 40);
                const Natural n = random_bits(rng, uniform(rng, 1, nu));
                check(oracle_weight(mult_mersenne(n, nu)) == nu, "mult_mersenne n=" + to_decimal(n));
              }

              // affix_one
              for (int i = 0; i < kCases; ++i) {
                const unsigned bits = uniform(rng, 1, 60);
                const Natural n = random_bits(rng, bits);
                const unsigned nu = bits + 1 + uniform(rng, 0, 16);
                const Natural r = affix_one(n, nu);
                check(oracle_weight(r) == oracle_weight(n) + 1 &&
                          oracle_square_weight(r) == oracle_square_weight(n) + oracle_weight(n) + 1,
                      "affix_one n=" + to_decimal(n));
              }

              // subtract_compose
              for (int i = 0; i < kCases; ++i) {
                const Natural n = random_odd(rng, uniform(rng, 1, 40));
                const Natural m = random_odd(rng, uniform(rng, 1, 40));
                const auto k = bit_length(n);
                const auto h = bit_length(m);
                const auto nu = std::max(2 * h - 1, h + k + 1) + uniform(rng, 0, 12);
                const Natural r = subtract_compose(n, m, nu);
                const auto nd = to_decimal(n);
                const auto md = to_decimal(m);
                const std::int64_t weight = std::int64_t{oracle_weight(n)} - oracle_weight(m) + static_cast<std::int64_t>(nu);
                const std::int64_t square = std::int64_t{oracle_square_weight(n)} + oracle_square_weight(m) -
                                            oracle::binary_weight(oracle::multiply(nd, md)) +
                                            static_cast<std::int64_t>(nu) - 1;
                check(oracle_weight(r) == weight && oracle_square_weight(r) == square,
                      "subtract_compose n=" + nd + " m=" + md);
              }

              // subtract_mersenne: exhaustive small odd n, random large
              for (std::uint64_t n = 1; n < 256; n += 2) {
                for (std::uint64_t h = bit_length(n) + 1; h <= 10; ++h) {
                  const Natural r = subtract_mersenne(n, h, 2 * h + 1);
                  check(oracle_weight(r) == oracle_weight(n) + h + 1 &&
                            oracle_square_weight(r) == oracle_square_weight(n) + 2 * h,
                        "subtract_mersenne exhaustive n=" + std::to_string(n));
                }
              }
              for (int i = 0; i < kCases; ++i) {
                const Natural n = random_odd(rng, uniform(rng, 1, 40));
                const auto h = bit_length(n) + uniform(rng, 1, 6);
                const auto nu = 2 * h + 1 + uniform(rng, 0, 6);
                const Natural r = subtract_mersenne(n, h, nu);
                check(oracle_weight(r) == oracle_weight(n) + nu - h &&
                          oracle_square_weight(r) == oracle_square_weight(n) + nu - 1,
                      "subtract_mersenne n=" + to_decimal(n));
              }

              // finalize_member: all odd n <= 10^4 with defect -1, plus random
              for (std::uint64_t n = 1; n <= 10'000; n += 2) {
                if (oracle_defect(n) != -1) continue;
                check(oracle_member(finalize_member(n, bit_length(n) + 2)), "finalize exhaustive n=" + std::to_string(n));
              }
              for (int found = 0; found < kCases;) {
                const Natural n = random_odd(rng, uniform(rng, 1, 36));
                if (oracle_defect(n) != -1) continue;
                ++found;
                check(oracle_member(finalize_member(n, bit_length(n) + 2 + uniform(rng, 0, 6))),
                      "finalize n=" + to_decimal(n));
              }

              // normalize_defect: all odd 1 < n <= 10^4 with defect >= 1, plus random
              for (std::uint64_t n = 3; n <= 10'000; n += 2) {
                if (oracle_defect(n) < 1) continue;
                check(oracle_defect(normalize_defect(n)) == -1, "normalize exhaustive n=" + std::to_string(n));
              }
              for (int found = 0; found < kCases;) {
                const Natural n = random_odd(rng, uniform(rng, 2, 40));
                if (oracle_defect(n) < 1) continue;
                ++found;
                check(oracle_defect(normalize_defect(n)) == -1, "normalize n=" + to_decimal(n));
              }

              // inflate: all 2 <= n <= 10^4, plus random
              auto inflate_ok = [&](const Natural& n) {
                const Natural r = inflate(n);
                const auto w = oracle_weight(n);
                const auto sq = oracle_square_weight(n);
                const auto rw = oracle_weight(r);
                const auto rsq = oracle_square_weight(r);
                return rw == w + 2 && rsq == sq + 2 * w + 3 && (sq < 3 || rsq > 2 * rw + 1);
              };
              for (std::uint64_t n = 2; n <= 10'000; ++n) check(inflate_ok(n), "inflate exhaustive n=" + std::to_string(n));
              for (int i = 0; i < kCases; ++i) {
                const Natural n = random_bits(rng, uniform(rng, 2, 40));
                check(inflate_ok(n), "inflate n=" + to_decimal(n));
              }

              const double elapsed = seconds_since(start);
              o.require(elapsed < 60.0, "lemma suites took " + std::to_string(elapsed) + " s");
              o.detail << checks << " checks; ";
            });

  criterion("[5] theorem chain: construct_family(101) gives 101 distinct verified members <= A*101^40, < 30 s",
            [](Outcome& o) {
              const double log2_a = read_log2_a();
              const auto start = Clock::now();
              const auto traces = construct_family_traces(101);
              const double elapsed = seconds_since(start);
              o.require(traces.size() == 101, "wrong family size");
              std::set<Natural> finals;
              const Natural bound =
                  pow2(static_cast<std::uint64_t>(std::ceil(log2_a))) * boost::multiprecision::pow(Natural(101), 40);
              std::vector<Natural> values;
              for (const auto& t : traces) {
                o.require(t.verify(), "trace for seed " + to_decimal(t.seed) + " fails verification");
                o.require(t.stages.size() == 4, "trace is not 4 stages");
                o.require(oracle_member(t.final_value), "final for seed " + to_decimal(t.seed) + " not a member");
                o.require(t.final_value <= bound, "final exceeds A*101^40");
                finals.insert(t.final_value);
                values.push_back(t.final_value);
              }
              o.require(finals.size() == 101, "finals not distinct");
              o.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
              o.detail << "A = 2^" << log2_a << ", measured log2(max final/101^40) = "
                       << family_constant_log2(101, values) << "; ";
            });

  criterion("[6] gap scan k=1..10 exhaustive; four_tuple(k) verified for k=9..40", [](Outcome& o) {
    for (unsigned k = 1; k <= 10; ++k) {
      o.require(scan_gap(k), "scan_gap(" + std::to_string(k) + ") false");
      const std::uint64_t lower = std::uint64_t{1} << (2 * k);
      for (std::uint64_t m = lower + 1; m < lower + (std::uint64_t{1} << k); ++m) {
        o.require(!oracle::isosquare(m), "oracle finds member " + std::to_string(m) + " in the gap");
      }
    }
    for (std::uint64_t k = 9; k <= 40; ++k) {
      const Natural n = four_tuple(k);
      for (int i = 0; i < 4; ++i) {
        o.require(oracle_member(n + i), "four_tuple(" + std::to_string(k) + ")+" + std::to_string(i));
      }
    }
  });

  criterion("[7] alpha_theoretical within 1e-8; alpha_limit(10^5) within 5e-4, monotone; Vandermonde exact k<=60",
            [](Outcome& o) {
              const double a = alpha_theoretical();
              o.require(std::abs(a - 0.75488750) < 1e-8, "alpha_theoretical off");
              double previous = -1e300;
              for (std::uint64_t k : {10, 100, 1000, 10000, 100000}) {
                const double v = alpha_limit(k);
                o.require(v > previous, "alpha_limit not increasing at k=" + std::to_string(k));
                previous = v;
              }
              o.require(std::abs(alpha_limit(100000) - a) < 5e-4, "alpha_limit(10^5) too far");
              o.detail << "alpha=" << a << ", alpha_limit(1e5)=" << alpha_limit(100000) << "; ";

              // Pascal's triangle as the exact reference
              std::vector<std::vector<Natural>> t(181);
              for (std::size_t n = 0; n <= 180; ++n) {
                t[n].assign(n + 1, 1);
                for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
              }
              for (std::size_t k = 1; k <= 60; ++k) {
                Natural sum = 0;
                for (std::size_t l = 0; l <= k; ++l) sum += t[k][l] * t[2 * k][l];
                o.require(sum == t[3 * k][k], "Vandermonde fails at k=" + std::to_string(k));
                o.require(binomial(3 * k, k) == t[3 * k][k], "binomial(3k,k) fails at k=" + std::to_string(k));
              }
            });

  const auto profile_path = std::filesystem::path(ISOSQUARE_TEST_TMPDIR) / "acceptance_profile.csv";

  criterion("[8] exponent fit: analyze --limit 10^7 gives alpha_hat in [0.70, 0.80]", [&](Outcome& o) {
    const auto run = run_analyze("10^7", profile_path);
    o.require(run.code == 0, "analyze exit code " + std::to_string(run.code));
    o.require(run.alpha_hat >= 0.70 && run.alpha_hat <= 0.80, "alpha_hat out of band");
    o.detail << "alpha_hat=" << run.alpha_hat << "; ";
  });

  criterion("[8b] optional 10^8 reproduction: alpha_hat in [0.71, 0.76], < 10 min", [](Outcome& o) {
    const auto run = run_analyze("10^8", {});
    o.require(run.code == 0, "analyze exit code " + std::to_string(run.code));
    o.require(run.alpha_hat >= 0.71 && run.alpha_hat <= 0.76, "alpha_hat out of band");
    o.require(run.seconds < 600.0, "took " + std::to_string(run.seconds) + " s");
    o.detail << "alpha_hat=" << run.alpha_hat << "; ";
  });

  criterion("[9] fit self-test: planted exponent recovered to 1e-9", [](Outcome& o) {
    // count = n^0.75 exactly at n = 2^(4j)
    std::vector<CountSample> samples;
    for (std::uint64_t j = 2; j <= 15; ++j) samples.push_back({std::uint64_t{1} << (4 * j), std::uint64_t{1} << (3 * j)});
    const auto fit = fit_exponent(samples);
    o.require(std::abs(fit.alpha_hat - 0.75) < 1e-9, "slope off");
    // count = 7 n^(1/2) at n = 4^j
    std::vector<CountSample> second;
    for (std::uint64_t j = 1; j <= 30; ++j) second.push_back({std::uint64_t{1} << (2 * j), 7 * (std::uint64_t{1} << j)});
    const auto fit2 = fit_exponent(second);
    o.require(std::abs(fit2.alpha_hat - 0.5) < 1e-9, "second slope off");
    o.require(std::abs(fit2.intercept - std::log(7.0)) < 1e-9, "second intercept off");
  });

  criterion("[10] profile over 2^10..10^7: values in [0.05, 20], >= 5 local extrema", [&](Outcome& o) {
    std::ifstream in(profile_path);
    o.require(static_cast<bool>(in), "profile CSV missing");
    std::string header;
    std::getline(in, header);
    o.require(header == "n,log2n,profile_value", "bad header '" + header + "'");
    std::vector<ProfilePoint> profile;
    for (std::string line; std::getline(in, line);) {
      std::istringstream fields(line);
      ProfilePoint p;
      char comma = 0;
      fields >> p.n >> comma >> p.log2n >> comma >> p.value;
      profile.push_back(p);
    }
    o.require(!profile.empty(), "empty profile");
    if (profile.empty()) return;
    o.require(profile.front().n == 1024, "profile does not start at 2^10");
    o.require(profile.back().n <= 10'000'000 && profile.back().n > 10'000'000 / 2, "profile does not reach 10^7");
    double lo = 1e300;
    double hi = -1e300;
    for (const auto& p : profile) {
      lo = std::min(lo, p.value);
      hi = std::max(hi, p.value);
    }
    o.require(lo >= 0.05 && hi <= 20.0, "profile leaves [0.05, 20]");
    const auto extrema = count_local_extrema(profile);
    o.require(extrema >= 5, "only " + std::to_string(extrema) + " local extrema");
    o.detail << profile.size() << " points, range [" << lo << ", " << hi << "], " << extrema << " extrema; ";
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
