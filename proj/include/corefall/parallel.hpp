#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace corefall {

// Splits [0, count) into contiguous blocks and runs fn(thread_id, begin, end)
// on each, one block per worker. Determinism contract: fn must write only to
// slots indexed by its own range (results land in pre-sized arrays, reduced
// sequentially afterwards), so the outcome never depends on scheduling.
// fn must not throw. threads <= 1 runs inline on the caller's thread.
inline void parallel_blocks(
    std::size_t count, int threads,
    const std::function<void(int, std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  std::size_t workers = threads <= 1 ? 1 : std::min<std::size_t>(threads, count);
  if (workers == 1) {
    fn(0, 0, count);
    return;
  }
  std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, static_cast<int>(w), begin, end);
  }
  for (auto& t : pool) t.join();
}

// convenience wrapper: fn(i) for each i, no thread id needed
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
  parallel_blocks(count, threads, [&](int, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) fn(i);
  });
}

}  // namespace corefall
