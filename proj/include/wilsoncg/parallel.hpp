#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace wilsoncg {

// Worker count for internal operator parallelism: WILSONCG_THREADS when set
// to a positive integer, otherwise the hardware concurrency.
std::size_t worker_count();

// Calls fn(i) for i in [0, n), split into contiguous chunks across workers.
// fn must not throw and must only write state owned by index i.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

}  // namespace wilsoncg
