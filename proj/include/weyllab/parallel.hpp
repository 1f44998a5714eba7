#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace weyl {

inline int thread_budget() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("WEYL_LAB_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < n) n = static_cast<unsigned>(v);
  }
  return static_cast<int>(n);
}

// Runs fn(i) for i in [0, n); results must be written to per-index slots by
// the caller so the assembly order stays deterministic.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&fn, w, n, workers] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

} // namespace weyl
