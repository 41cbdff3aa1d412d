#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace tourney {

/// Worker cap: TOURNEY_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Splits [0, count) into contiguous chunks, runs fn(begin, end) for each on
/// its own thread and returns the partial results in chunk order. Callers
/// reduce integer partials, so the outcome does not depend on the split.
template <class Fn>
auto parallel_chunks(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))> {
  using Partial = decltype(fn(std::size_t{}, std::size_t{}));
  const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), count));
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    partials[0] = fn(std::size_t{0}, count);
    return partials;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t k = 0; k < workers; ++k) {
    const std::size_t begin = count * k / workers;
    const std::size_t end = count * (k + 1) / workers;
    threads.emplace_back([&partials, &fn, k, begin, end] { partials[k] = fn(begin, end); });
  }
  threads.clear();
  return partials;
}

}  // namespace tourney
