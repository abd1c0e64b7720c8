#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace trajlet {

/// Global worker cap, mirrored by the CLI's --threads flag and the
/// TRAJLET_THREADS environment variable. 0 means hardware concurrency.
inline std::size_t& thread_cap() {
  static std::size_t cap = 0;
  return cap;
}

inline void set_thread_cap(std::size_t n) { thread_cap() = n; }

inline std::size_t effective_threads() {
  std::size_t cap = thread_cap();
  if (cap == 0) cap = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return cap;
}

/// Runs fn(i) for i in [0, n). Work is split into chunks whose count does
/// not depend on the thread cap, and every fn(i) writes only state owned by
/// index i, so results are identical for any worker count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::min(effective_threads(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t chunk = std::max<std::size_t>(1, n / (workers * 4));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= n) break;
      const std::size_t end = std::min(n, begin + chunk);
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

}  // namespace trajlet
