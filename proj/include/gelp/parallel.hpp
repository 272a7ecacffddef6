#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace gelp {

// Runs fn(begin, end) over contiguous chunks; callers write results by index so output order is fixed.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count / 256, 1))));
  if (jobs == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t step = (count + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t b = j * step, e = std::min(count, b + step);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gelp
