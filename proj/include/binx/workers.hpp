#pragma once

/// @file workers.hpp
/// Minimal helpers for partitioning an index range across worker threads.
/// Results must be merged in chunk order by the caller so the outcome is
/// independent of scheduling.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace binx {

/// Worker count for partitioned scans: the BINX_WORKERS environment
/// variable when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
inline int worker_count() {
  if (const char* env = std::getenv("BINX_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, total) into at most `workers` contiguous chunks and runs
/// body(chunk_index, begin, end) on each, in parallel when it pays.  The
/// chunk boundaries depend only on (total, workers), never on timing.
template <typename Body>
void parallel_chunks(std::uint64_t total, int workers, Body&& body) {
  if (workers < 1) workers = 1;
  const std::uint64_t kMinPerWorker = 1024;
  while (workers > 1 &&
         total / static_cast<std::uint64_t>(workers) < kMinPerWorker)
    --workers;
  if (workers == 1) {
    body(0, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t step = total / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = step * static_cast<std::uint64_t>(w);
    const std::uint64_t end = (w == workers - 1) ? total : begin + step;
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace binx
