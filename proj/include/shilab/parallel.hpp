#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace shilab {

/**
 * Worker count for data-parallel loops: the SHILAB_THREADS environment
 * variable when set to a positive integer, otherwise the hardware
 * concurrency.  SHILAB_THREADS=1 forces sequential execution.
 */
inline unsigned worker_count() {
  if (const char* env = std::getenv("SHILAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/**
 * Runs fn(i) for i in [0, n).  Work is split into contiguous blocks, one per
 * worker; results must be written to pre-sized slots (no synchronization is
 * provided), which keeps every caller deterministic regardless of the
 * worker count.
 */
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace shilab
