// Block-parallel loops. Callers aggregate per-block results in block order,
// so results never depend on the thread count.
#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace shallow {

inline std::atomic<int>& thread_setting() {
  static std::atomic<int> n{1};
  return n;
}
inline void set_thread_count(int n) { thread_setting() = std::max(1, n); }
inline int thread_count() { return thread_setting(); }

// Calls f(block, begin, end) over `blocks` contiguous blocks of [0, n).
template <class F>
void parallel_blocks(long long n, int blocks, F&& f) {
  blocks = int(std::max<long long>(1, std::min<long long>(blocks, n)));
  auto run = [&](int b) {
    long long lo = n * b / blocks, hi = n * (b + 1) / blocks;
    f(b, lo, hi);
  };
  int threads = std::min(thread_count(), blocks);
  if (threads <= 1) {
    for (int b = 0; b < blocks; ++b) run(b);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int b; (b = next++) < blocks;) run(b);
    });
  for (auto& th : pool) th.join();
}

}  // namespace shallow
