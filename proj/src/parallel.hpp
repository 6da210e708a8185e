#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace toric3::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks, runs `work(begin, end)` on each
/// chunk in its own thread and folds the partial results left to right, so
/// the merged value does not depend on scheduling.
template <typename Result, typename Work, typename Merge>
Result parallel_reduce(std::size_t count, unsigned threads, Result init, Work work, Merge merge) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), count));
  if (workers == 1) return merge(std::move(init), work(std::size_t{0}, count));
  std::vector<Result> partial(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { partial[w] = work(begin, end); });
    }
  }
  for (auto& p : partial) init = merge(std::move(init), std::move(p));
  return init;
}

}  // namespace toric3::detail
