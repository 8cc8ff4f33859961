#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace ggt {

int max_threads();
void set_max_threads(int k);

// Splits [0, n) into contiguous chunks and folds the per-chunk results in
// index order, so the outcome does not depend on the worker count.
template <typename T, typename ChunkFn, typename Combine>
T parallel_reduce(std::int64_t n, T init, ChunkFn chunk, Combine combine) {
  if (n <= 0) return init;
  int workers = std::min<std::int64_t>(max_threads(), n);
  if (workers <= 1) return combine(init, chunk(0, n));

  std::vector<T> partial(static_cast<std::size_t>(workers), init);
  std::vector<std::thread> pool;
  std::int64_t per = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::int64_t lo = w * per, hi = std::min<std::int64_t>(n, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&partial, w, lo, hi, &chunk]() {
      partial[static_cast<std::size_t>(w)] = chunk(lo, hi);
    });
  }
  for (auto& t : pool) t.join();
  T acc = init;
  for (const T& x : partial) acc = combine(acc, x);
  return acc;
}

}  // namespace ggt
