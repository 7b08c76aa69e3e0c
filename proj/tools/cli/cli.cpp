#include "cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/formats.hpp"
#include "isosquare/analysis.hpp"
#include "isosquare/constructions.hpp"
#include "isosquare/digits.hpp"
#include "isosquare/enumeration.hpp"
#include "isosquare/errors.hpp"
#include "isosquare/membership.hpp"
#include "isosquare/property_suites.hpp"

namespace isosquare::cli {

namespace {

constexpr std::uint64_t kAnalyzeMinLimit = std::uint64_t{1} << 12;

std::optional<std::string> env(const char* name) {
  if (const char* value = std::getenv(name); value != nullptr && *value != '\0') return std::string(value);
  return std::nullopt;
}

// Command-line values, filled by CLI11 and validated in the handlers.
struct Arguments {
  std::string format;

  std::string check_n;
  std::string triple;

  std::string limit;
  std::string checkpoint;
  unsigned workers = 0;

  std::string grid;

  std::string seed;
  std::string family;

  std::string alpha_mode = "theoretical";
  std::string fit_grid = "uniform";
  std::string out_path;
  std::string min_n = "1024";

  std::string suite;
  std::uint64_t cases = 10'000;
  std::uint64_t rng_seed = SuiteOptions{}.seed;
};

OutputFormat resolve_format(const Arguments& args, OutputFormat fallback,
                            std::initializer_list<OutputFormat> allowed) {
  OutputFormat format = fallback;
  if (!args.format.empty()) {
    format = parse_format(args.format);
  } else if (auto from_env = env("ISOSQUARE_FORMAT")) {
    format = parse_format(*from_env);
  }
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    throw InvalidArgument("format '" + std::string(format_name(format)) + "' is not supported by this command");
  }
  return format;
}

PropertyTriple parse_triple(std::string_view text) {
  std::vector<unsigned> parts;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
      throw InvalidArgument("malformed triple '" + std::string(text) + "' (expected k,l,m)");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (parts.size() != 3) throw InvalidArgument("malformed triple '" + std::string(text) + "' (expected k,l,m)");
  return PropertyTriple(parts[0], parts[1], parts[2]);
}

std::vector<std::uint64_t> parse_grid(std::string_view spec, std::uint64_t limit) {
  if (spec.rfind("geometric:", 0) == 0) {
    const std::string rest(spec.substr(10));
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InvalidArgument("grid spec must be geometric:start:ratio");
    double start = 0.0;
    double ratio = 0.0;
    try {
      start = static_cast<double>(parse_limit(rest.substr(0, colon)));
      std::size_t used = 0;
      const std::string ratio_text = rest.substr(colon + 1);
      ratio = std::stod(ratio_text, &used);
      if (used != ratio_text.size()) throw InvalidArgument("bad ratio");
    } catch (const std::logic_error&) {
      throw InvalidArgument("grid spec must be geometric:start:ratio");
    }
    return geometric_grid(start, ratio, limit);
  }
  std::vector<std::uint64_t> grid;
  std::string item;
  std::istringstream in{std::string(spec)};
  while (std::getline(in, item, ',')) grid.push_back(parse_limit(item));
  if (grid.empty()) throw InvalidArgument("empty grid");
  return grid;
}

std::filesystem::path resolve_checkpoint(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (auto dir = env("ISOSQUARE_CHECKPOINT_DIR")) return std::filesystem::path(*dir) / p;
  }
  return p;
}

int cmd_check(const Arguments& args, std::ostream& out) {
  const OutputFormat format =
      resolve_format(args, OutputFormat::plain, {OutputFormat::plain, OutputFormat::csv, OutputFormat::json_lines});
  const Natural n = parse_big(args.check_n);
  if (n < 1) throw InvalidArgument("n must be >= 1");
  const PropertyTriple triple = args.triple.empty() ? PropertyTriple::isosquare() : parse_triple(args.triple);

  const auto power = boost::multiprecision::pow(n, triple.power());
  const auto sum = digit_sum(n, triple.base());
  const auto power_sum = digit_sum(power, triple.base());
  const bool member = satisfies(n, triple);

  std::ostringstream triple_text;
  triple_text << triple.base() << ',' << triple.multiplier() << ',' << triple.power();
  switch (format) {
    case OutputFormat::plain:
      if (triple == PropertyTriple::isosquare()) {
        out << to_decimal(n) << " weight=" << sum << " square_weight=" << power_sum;
      } else {
        out << to_decimal(n) << " triple=" << triple_text.str() << " digit_sum=" << sum
            << " power_digit_sum=" << power_sum;
      }
      out << (member ? " member" : " non-member") << '\n';
      break;
    case OutputFormat::csv:
      out << "n,base,multiplier,power,digit_sum,power_digit_sum,member\n"
          << to_decimal(n) << ',' << triple_text.str() << ',' << sum << ',' << power_sum << ','
          << (member ? "true" : "false") << '\n';
      break;
    case OutputFormat::json_lines: {
      nlohmann::ordered_json record;
      record["n"] = to_decimal(n);
      record["base"] = triple.base();
      record["multiplier"] = triple.multiplier();
      record["power"] = triple.power();
      record["digit_sum"] = sum;
      record["power_digit_sum"] = power_sum;
      record["member"] = member;
      out << record.dump() << '\n';
      break;
    }
  }
  return member ? kExitOk : kExitNegative;
}

int cmd_enumerate(const Arguments& args, std::ostream& out) {
  const OutputFormat format =
      resolve_format(args, OutputFormat::plain, {OutputFormat::plain, OutputFormat::csv, OutputFormat::json_lines});
  const std::uint64_t limit = parse_limit(args.limit);
  if (limit < 1) throw InvalidArgument("--limit must be >= 1");

  SieveOptions options;
  options.workers = args.workers;
  std::optional<Checkpoint> checkpoint;
  std::uint64_t cumulative = 0;
  if (!args.checkpoint.empty()) {
    checkpoint.emplace(resolve_checkpoint(args.checkpoint));
    if (const auto last = checkpoint->last()) {
      options.first = last->chunk_end + 1;
      cumulative = last->count;
    }
    options.on_chunk = [&](std::uint64_t chunk_end, std::uint64_t members) {
      cumulative += members;
      checkpoint->append({chunk_end, cumulative});
    };
  }

  if (format == OutputFormat::csv) out << "n\n";
  sieve_each(
      limit,
      [&](std::uint64_t m) {
        if (format == OutputFormat::json_lines) {
          out << "{\"n\":" << m << "}\n";
        } else {
          out << m << '\n';
        }
      },
      options);
  return kExitOk;
}

int cmd_count(const Arguments& args, std::ostream& out) {
  const OutputFormat format =
      resolve_format(args, OutputFormat::csv, {OutputFormat::plain, OutputFormat::csv, OutputFormat::json_lines});
  const std::uint64_t limit = parse_limit(args.limit);
  const auto grid = parse_grid(args.grid, limit);
  SieveOptions options;
  options.workers = args.workers;
  write_counts(out, counting(limit, grid, options), format);
  return kExitOk;
}

int cmd_construct(const Arguments& args, std::ostream& out) {
  const OutputFormat format = resolve_format(args, OutputFormat::plain, {OutputFormat::plain, OutputFormat::json_lines});
  if (args.seed.empty() == args.family.empty()) throw InvalidArgument("give exactly one of --seed or --family");
  if (!args.seed.empty()) {
    write_trace(out, construct_one(parse_big(args.seed)), format);
    return kExitOk;
  }
  const Natural n = parse_big(args.family);
  const auto traces = construct_family_traces(n, args.workers);
  for (const auto& trace : traces) write_trace(out, trace, format);
  if (format == OutputFormat::plain) {
    std::vector<Natural> finals;
    for (const auto& t : traces) finals.push_back(t.final_value);
    out << "family " << to_decimal(n) << ": " << traces.size() << " distinct members, log2(max final / n^40) = "
        << std::setprecision(6) << family_constant_log2(n, finals) << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const Arguments& args, std::ostream& out) {
  const OutputFormat format = resolve_format(args, OutputFormat::plain, {OutputFormat::plain, OutputFormat::json_lines});
  const std::uint64_t limit = parse_limit(args.limit);
  if (limit < kAnalyzeMinLimit) throw InvalidArgument("--limit must be >= 2^12");
  const std::uint64_t min_n = parse_limit(args.min_n);
  if (args.alpha_mode != "theoretical" && args.alpha_mode != "fit") {
    throw InvalidArgument("--alpha must be 'theoretical' or 'fit'");
  }

  std::vector<std::uint64_t> fit_points;
  if (args.fit_grid == "uniform") {
    fit_points = uniform_grid(limit, 1000, min_n);
  } else if (args.fit_grid == "geometric") {
    fit_points = profile_grid(limit, min_n);
  } else {
    throw InvalidArgument("--fit-grid must be 'uniform' or 'geometric'");
  }
  const auto profile_points = profile_grid(limit, min_n);

  std::vector<std::uint64_t> all_points;
  std::set_union(fit_points.begin(), fit_points.end(), profile_points.begin(), profile_points.end(),
                 std::back_inserter(all_points));
  SieveOptions options;
  options.workers = args.workers;
  const auto samples = counting(limit, all_points, options);

  auto select = [&](const std::vector<std::uint64_t>& points) {
    std::vector<CountSample> chosen;
    auto it = samples.begin();
    for (auto p : points) {
      it = std::lower_bound(it, samples.end(), p, [](const CountSample& s, std::uint64_t v) { return s.n < v; });
      chosen.push_back(*it);
    }
    return chosen;
  };
  const auto fit = fit_exponent(select(fit_points));
  const double alpha = args.alpha_mode == "fit" ? fit.alpha_hat : alpha_theoretical();
  const auto profile = fluctuation_profile(select(profile_points), alpha);

  double lo = profile.empty() ? 0.0 : profile.front().value;
  double hi = lo;
  std::size_t empty_points = 0;
  for (const auto& p : profile) {
    lo = std::min(lo, p.value);
    hi = std::max(hi, p.value);
    empty_points += p.empty_count ? 1 : 0;
  }
  const auto extrema = count_local_extrema(profile);

  if (!args.out_path.empty()) {
    std::ofstream file(args.out_path);
    if (!file) throw IoError("cannot write profile to '" + args.out_path + "'");
    write_profile_csv(file, profile);
    if (!file) throw IoError("cannot write profile to '" + args.out_path + "'");
  }

  if (format == OutputFormat::json_lines) {
    nlohmann::ordered_json record;
    record["limit"] = limit;
    record["alpha_theoretical"] = alpha_theoretical();
    record["alpha_hat"] = fit.alpha_hat;
    record["intercept"] = fit.intercept;
    record["residual_rms"] = fit.residual_rms;
    record["sample_count"] = fit.sample_count;
    record["fit_grid"] = args.fit_grid;
    record["profile_alpha"] = alpha;
    record["profile_points"] = profile.size();
    record["profile_min"] = lo;
    record["profile_max"] = hi;
    record["profile_local_extrema"] = extrema;
    record["profile_empty_points"] = empty_points;
    out << record.dump() << '\n';
  } else {
    out << std::setprecision(10);
    out << "limit " << limit << '\n'
        << "alpha_theoretical " << alpha_theoretical() << '\n'
        << "alpha_hat " << fit.alpha_hat << '\n'
        << "intercept " << fit.intercept << '\n'
        << "residual_rms " << fit.residual_rms << '\n'
        << "sample_count " << fit.sample_count << '\n'
        << "fit_grid " << args.fit_grid << '\n'
        << "profile_alpha " << alpha << '\n'
        << "profile_points " << profile.size() << '\n'
        << "profile_min " << lo << '\n'
        << "profile_max " << hi << '\n'
        << "profile_local_extrema " << extrema << '\n'
        << "profile_empty_points " << empty_points << '\n';
  }
  return kExitOk;
}

int cmd_props(const Arguments& args, std::ostream& out) {
  SuiteOptions options;
  options.cases = args.cases;
  options.seed = args.rng_seed;
  const auto reports = run_suite(args.suite, options);
  bool all_passed = true;
  for (const auto& report : reports) {
    out << (report.passed() ? "PASS " : "FAIL ") << report.name << " checks=" << report.checks << '\n';
    for (const auto& failure : report.failures) out << "  counterexample: " << failure << '\n';
    all_passed = all_passed && report.passed();
  }
  return all_passed ? kExitOk : kExitNegative;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent, std::string_view text) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      throw InvalidArgument("value '" + std::string(text) + "' does not fit in 64 bits");
    }
    result *= base;
  }
  return result;
}

}  // namespace

Natural parse_big(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return parse_natural(text);
  const Natural base = parse_natural(text.substr(0, caret));
  const Natural exponent = parse_natural(text.substr(caret + 1));
  if (exponent > 100'000) throw InvalidArgument("exponent too large in '" + std::string(text) + "'");
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

std::uint64_t parse_limit(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    const Natural value = parse_natural(text);
    if (bit_length(value) > 64) throw InvalidArgument("value '" + std::string(text) + "' does not fit in 64 bits");
    return value.convert_to<std::uint64_t>();
  }
  const Natural base = parse_natural(text.substr(0, caret));
  const Natural exponent = parse_natural(text.substr(caret + 1));
  if (bit_length(base) > 64 || bit_length(exponent) > 16) {
    throw InvalidArgument("value '" + std::string(text) + "' does not fit in 64 bits");
  }
  return checked_pow(base.convert_to<std::uint64_t>(), exponent.convert_to<std::uint64_t>(), text);
}

int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
  Arguments args;
  CLI::App app{"isosquare: integers n with B(n) = B(n^2) and the (k,l,m) digit-sum property"};
  app.name("isosquare");
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Test n for the (k,l,m) property (default 2,1,2)");
  check->add_option("n", args.check_n, "Positive integer (decimal, or b^e)")->required();
  check->add_option("--triple", args.triple, "Property triple k,l,m");
  check->add_option("--format", args.format, "plain, csv or json-lines");

  auto* enumerate = app.add_subcommand("enumerate", "List every member up to --limit");
  enumerate->add_option("--limit", args.limit, "Upper bound (inclusive); accepts 10^k, 2^k")->required();
  enumerate->add_option("--format", args.format, "plain, csv or json-lines");
  enumerate->add_option("--checkpoint", args.checkpoint, "Resume file of 'chunk_end count' records");
  enumerate->add_option("--workers", args.workers, "Worker threads (0 = all cores, 1 = sequential)");

  auto* count = app.add_subcommand("count", "Counting function p(n) = #{members m < n} on a grid");
  count->add_option("--limit", args.limit, "Largest admissible grid point")->required();
  count->add_option("--grid", args.grid, "Comma list or geometric:start:ratio")->required();
  count->add_option("--format", args.format, "csv (default), plain or json-lines");
  count->add_option("--workers", args.workers, "Worker threads (0 = all cores)");

  auto* construct = app.add_subcommand("construct", "Build members through the inflate/normalize/finalize chain");
  construct->add_option("--seed", args.seed, "Single seed > 1, not a power of two");
  construct->add_option("--family", args.family, "Odd n > 1: n distinct members from seeds 2^k + i");
  construct->add_option("--format", args.format, "plain or json-lines");
  construct->add_option("--workers", args.workers, "Worker threads for --family (0 = all cores)");

  auto* analyze = app.add_subcommand("analyze", "Fit the growth exponent of p(n) and emit the fluctuation profile");
  analyze->add_option("--limit", args.limit, "Sieve bound, >= 2^12")->required();
  analyze->add_option("--alpha", args.alpha_mode, "Profile exponent: theoretical (default) or fit");
  analyze->add_option("--fit-grid", args.fit_grid, "uniform (default, 1000 points) or geometric (2^(1/4) steps)");
  analyze->add_option("--min-n", args.min_n, "Smallest grid point used (default 1024)");
  analyze->add_option("--out", args.out_path, "Profile CSV path (n,log2n,profile_value)");
  analyze->add_option("--format", args.format, "plain or json-lines");
  analyze->add_option("--workers", args.workers, "Worker threads (0 = all cores)");

  auto* props = app.add_subcommand("props", "Run identity property suites");
  props->add_option("--suite", args.suite, "lemmas, gaps, tuples, mersenne or all")->required();
  props->add_option("--cases", args.cases, "Random cases per identity (default 10000)");
  props->add_option("--seed", args.rng_seed, "Random seed");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(args, out);
    if (enumerate->parsed()) return cmd_enumerate(args, out);
    if (count->parsed()) return cmd_count(args, out);
    if (construct->parsed()) return cmd_construct(args, out);
    if (analyze->parsed()) return cmd_analyze(args, out);
    if (props->parsed()) return cmd_props(args, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionViolation& e) {
    err << "error: precondition violated: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace isosquare::cli
