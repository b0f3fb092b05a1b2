#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace entroscope {

/// Thread budget: min(hardware, ENTROSCOPE_THREADS). At most one thread per task.
inline int thread_budget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("ENTROSCOPE_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

/// Runs fn(i) for i in [0, count) on a bounded pool. Results land in a vector
/// indexed by i, so reductions over the output are deterministic regardless of
/// scheduling.
template <class Result>
std::vector<Result> parallel_map(int count, const std::function<Result(int)>& fn) {
  std::vector<Result> results(count);
  int threads = std::min(thread_budget(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += threads) results[i] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace entroscope
