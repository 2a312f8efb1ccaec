#ifndef MOTIFMAP_PARALLEL_HPP
#define MOTIFMAP_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace motifmap {

// Worker cap: MOTIFMAP_THREADS when set, hardware concurrency otherwise.
inline int worker_count() {
  if (const char* env = std::getenv("MOTIFMAP_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, n). Results must be written to index-addressed
// slots so assembly order is independent of scheduling.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace motifmap

#endif
