#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace topolayout {

// Runs fn(i) for i in [0, n). Each index writes only its own output slot, so
// results are identical for any thread count; reductions happen afterwards in
// index order.
inline void parallel_for(size_t n, int threads, const std::function<void(size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= n) break;
      fn(i);
    }
  };
  size_t pool = std::min<size_t>(static_cast<size_t>(threads), n);
  std::vector<std::thread> ts;
  ts.reserve(pool);
  for (size_t t = 0; t < pool; ++t) ts.emplace_back(worker);
  for (auto& t : ts) t.join();
}

}  // namespace topolayout
