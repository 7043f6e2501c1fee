// Apache License, Version 2.0, refer to LICENSE.txt
#ifndef RBTEST_PARALLEL_HPP
#define RBTEST_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rbtest {

/// Runs fn(begin, end) over a contiguous partition of [0, total) on `workers`
/// threads. The partition depends only on (total, workers); combined with
/// per-replicate substreams this keeps replicate loops independent of the
/// worker count.
inline void parallel_chunks(std::int64_t total, int workers,
                            const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (workers <= 1 || total < 2) {
    fn(0, total);
    return;
  }
  const int w = static_cast<int>(std::min<std::int64_t>(workers, total));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (int c = 0; c < w; ++c) {
    const std::int64_t begin = total * c / w;
    const std::int64_t end = total * (c + 1) / w;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rbtest

#endif
