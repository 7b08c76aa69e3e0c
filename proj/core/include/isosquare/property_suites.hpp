#pragma once

// Randomized and exhaustive checks of the construction identities, runnable
// on demand (the CLI's `props` command) as well as from the test suites.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace isosquare {

struct SuiteOptions {
  std::uint64_t cases = 10'000;  // random admissible cases per identity
  std::uint64_t seed = 0x1505'0a2e;
};

struct SuiteReport {
  std::string name;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // counterexample descriptions, capped

  bool passed() const noexcept { return failures.empty() && checks > 0; }
};

/// "lemmas", "gaps", "tuples", "mersenne".
std::vector<std::string_view> suite_names();

/// Runs one suite, or every suite for "all". The lemma suite reports each
/// identity separately. Unknown names throw InvalidArgument.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace isosquare
