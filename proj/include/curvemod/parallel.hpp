#pragma once
// Deterministic fork-join helper: map a function over an index range on a
// thread pool and return results in index order. Output never depends on
// scheduling; callers must pass side-effect-free functions.

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace curvemod {

// Evaluates fn(0..count-1), possibly concurrently, and returns the results
// ordered by index. Runs inline when count is small or hardware_concurrency
// is unavailable.
template <typename Result>
std::vector<Result> parallel_map_indexed(
    std::size_t count, const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> results(count);
  if (count == 0) return results;

  const std::size_t hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min(count, hw == 0 ? std::size_t{1} : hw);
  if (workers <= 1 || count < 16) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) results[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace curvemod
