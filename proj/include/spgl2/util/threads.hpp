#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace spgl2 {

/// Process-wide worker count; set once by the CLI (--threads).
inline int& thread_count() {
  static int n = 1;
  return n;
}

/// Static-chunked parallel loop. Each index writes only its own slot,
/// so results are independent of the worker count; any reduction is
/// done by the caller in fixed index order afterwards.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = std::max(1, std::min<int>(thread_count(), static_cast<int>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace spgl2
