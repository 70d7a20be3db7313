#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace stablesketch {

/// 0 means "all hardware threads".
inline unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Calls fn(begin, end) on contiguous chunks covering [0, n). Chunk boundaries
 * are multiples of `grain`. Work is split by position only, so any function
 * whose output for an index depends only on that index gives the same result
 * for every thread count. The first exception thrown by a worker is rethrown.
 */
template <class Fn>
void parallel_chunks(std::size_t n, std::size_t grain, unsigned threads, Fn&& fn) {
  threads = resolve_threads(threads);
  grain = std::max<std::size_t>(grain, 1);
  const std::size_t units = (n + grain - 1) / grain;
  const std::size_t workers = std::min<std::size_t>(threads, units);
  if (workers <= 1) {
    if (n > 0) fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, units * w / workers * grain);
    const std::size_t end = std::min(n, units * (w + 1) / workers * grain);
    pool.emplace_back([&fn, &errors, w, begin, end] {
      try {
        if (begin < end) fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace stablesketch
