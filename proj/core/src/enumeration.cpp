#include "isosquare/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "isosquare/errors.hpp"
#include "isosquare/membership.hpp"

namespace isosquare {

namespace {

void scan_range(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
  out.clear();
  for (std::uint64_t m = lo;; ++m) {
    if (detail::isosquare_word(m)) out.push_back(m);
    if (m == hi) break;
  }
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

void sieve_each(std::uint64_t limit, const std::function<void(std::uint64_t)>& emit,
                const SieveOptions& options) {
  if (options.chunk_size == 0) throw InvalidArgument("sieve: chunk_size must be positive");
  const std::uint64_t first = std::max<std::uint64_t>(options.first, 1);
  if (limit < first) return;

  const std::uint64_t span = limit - first;  // chunks cover [first, limit]
  const std::uint64_t chunk_count = span / options.chunk_size + 1;
  const unsigned workers = resolve_workers(options.workers);
  const std::uint64_t batch = workers == 1 ? 1 : std::uint64_t{workers} * 4;

  auto chunk_bounds = [&](std::uint64_t index) {
    const std::uint64_t lo = first + index * options.chunk_size;
    const std::uint64_t hi = (limit - lo < options.chunk_size) ? limit : lo + options.chunk_size - 1;
    return std::pair{lo, hi};
  };

  std::vector<std::vector<std::uint64_t>> results(batch);
  for (std::uint64_t base = 0; base < chunk_count; base += batch) {
    const std::uint64_t in_batch = std::min(batch, chunk_count - base);

    if (workers == 1 || in_batch == 1) {
      for (std::uint64_t i = 0; i < in_batch; ++i) {
        const auto [lo, hi] = chunk_bounds(base + i);
        scan_range(lo, hi, results[i]);
      }
    } else {
      std::atomic<std::uint64_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      auto work = [&] {
        try {
          for (std::uint64_t i = next++; i < in_batch; i = next++) {
            const auto [lo, hi] = chunk_bounds(base + i);
            scan_range(lo, hi, results[i]);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      };
      {
        std::vector<std::jthread> pool;
        const auto threads = std::min<std::uint64_t>(workers, in_batch);
        for (std::uint64_t t = 0; t < threads; ++t) pool.emplace_back(work);
      }
      if (failure) std::rethrow_exception(failure);
    }

    for (std::uint64_t i = 0; i < in_batch; ++i) {
      for (auto m : results[i]) emit(m);
      if (options.on_chunk) options.on_chunk(chunk_bounds(base + i).second, results[i].size());
    }
  }
}

std::vector<std::uint64_t> sieve(std::uint64_t limit, const SieveOptions& options) {
  std::vector<std::uint64_t> members;
  sieve_each(limit, [&](std::uint64_t m) { members.push_back(m); }, options);
  return members;
}

std::vector<std::uint64_t> sieve_sequential(std::uint64_t limit) {
  std::vector<std::uint64_t> members;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (is_isosquare(m)) members.push_back(m);
    if (m == UINT64_MAX) break;
  }
  return members;
}

std::vector<CountSample> counting(std::uint64_t limit, std::span<const std::uint64_t> grid,
                                  const SieveOptions& options) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && grid[i] <= grid[i - 1]) throw InvalidArgument("counting: grid must be strictly increasing");
    if (grid[i] > limit) throw InvalidArgument("counting: grid point exceeds limit");
  }
  std::vector<CountSample> samples;
  samples.reserve(grid.size());
  if (grid.empty()) return samples;

  std::size_t next = 0;
  std::uint64_t count = 0;
  auto on_member = [&](std::uint64_t m) {
    while (next < grid.size() && grid[next] <= m) samples.push_back({grid[next++], count});
    ++count;
  };
  if (grid.back() >= 2) sieve_each(grid.back() - 1, on_member, options);
  while (next < grid.size()) samples.push_back({grid[next++], count});
  return samples;
}

std::vector<RunRecord> find_runs(std::uint64_t limit, std::uint64_t min_length, const SieveOptions& options) {
  if (min_length < 2) throw InvalidArgument("find_runs: min_length must be >= 2");
  std::vector<RunRecord> runs;
  RunRecord current;
  auto close = [&] {
    if (current.length >= min_length) runs.push_back(current);
    current = {};
  };
  sieve_each(
      limit,
      [&](std::uint64_t m) {
        if (current.length > 0 && current.start + current.length == m) {
          ++current.length;
        } else {
          close();
          current = {m, 1};
        }
      },
      options);
  close();
  return runs;
}

bool scan_gap(unsigned k) {
  if (k < 1 || k > 15) throw InvalidArgument("scan_gap: k must be in [1, 15]");
  const std::uint64_t lower = std::uint64_t{1} << (2 * k);
  const std::uint64_t upper = lower + (std::uint64_t{1} << k);
  for (std::uint64_t m = lower + 1; m < upper; ++m) {
    if (detail::isosquare_word(m)) return false;
  }
  return true;
}

}  // namespace isosquare
