#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace isosquare {

struct SieveOptions {
  /// 0 = hardware concurrency; 1 = purely sequential, no threads started.
  unsigned workers = 0;
  /// Width of the contiguous ranges handed to workers.
  std::uint64_t chunk_size = std::uint64_t{1} << 20;
  /// First value examined; used to resume from a checkpoint.
  std::uint64_t first = 1;
  /// Called once per chunk, in chunk order, after that chunk's members were
  /// emitted: (last value of the chunk, number of members in the chunk).
  std::function<void(std::uint64_t, std::uint64_t)> on_chunk;
};

/// Calls `emit` for every member m with first <= m <= limit, in increasing
/// order. Chunks are computed in parallel and merged in chunk order, so the
/// sequence of calls does not depend on the worker count. Squares of values
/// up to 2^32 - 1 use 64-bit arithmetic, larger values 128-bit.
void sieve_each(std::uint64_t limit, const std::function<void(std::uint64_t)>& emit,
                const SieveOptions& options = {});

/// All members m <= limit in increasing order.
std::vector<std::uint64_t> sieve(std::uint64_t limit, const SieveOptions& options = {});

/// Reference single-threaded scan, one value at a time.
std::vector<std::uint64_t> sieve_sequential(std::uint64_t limit);

/// p(n): number of members m with m < n (strict).
struct CountSample {
  std::uint64_t n = 0;
  std::uint64_t count = 0;

  bool operator==(const CountSample&) const = default;
};

/// p(n) at every grid point. The grid must be strictly increasing with every
/// point <= limit; otherwise InvalidArgument.
std::vector<CountSample> counting(std::uint64_t limit, std::span<const std::uint64_t> grid,
                                  const SieveOptions& options = {});

/// A maximal run of consecutive members, clipped to [1, limit].
struct RunRecord {
  std::uint64_t start = 0;
  std::uint64_t length = 0;

  bool operator==(const RunRecord&) const = default;
};

/// Runs of length >= min_length (min_length >= 2) inside [1, limit], by start.
std::vector<RunRecord> find_runs(std::uint64_t limit, std::uint64_t min_length,
                                 const SieveOptions& options = {});

/// Exhaustively checks that no member lies strictly between 2^(2k) and
/// 2^(2k) + 2^k. k must be in [1, 15].
bool scan_gap(unsigned k);

struct CheckpointRecord {
  std::uint64_t chunk_end = 0;
  std::uint64_t count = 0;  // members in [1, chunk_end]

  bool operator==(const CheckpointRecord&) const = default;
};

/// Resume file for long sieve runs: one "chunk_end count" record per line,
/// both fields strictly/weakly increasing respectively.
class Checkpoint {
 public:
  /// Throws IoError if the file cannot be opened for appending.
  explicit Checkpoint(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }

  /// Records in file order. A missing file yields no records. Malformed or
  /// non-monotone content throws IoError.
  std::vector<CheckpointRecord> load() const;
  std::optional<CheckpointRecord> last() const;

  /// Appends and flushes one record. Throws InvalidArgument if it would break
  /// monotonicity with the last record on file.
  void append(const CheckpointRecord& record);

 private:
  std::filesystem::path path_;
  std::optional<CheckpointRecord> last_;
};

}  // namespace isosquare
