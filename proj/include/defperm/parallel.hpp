#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace defperm {

/// Static block partition of [0, count); fn(index) must only write state owned
/// by that index so results are deterministic regardless of the job count.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace defperm
