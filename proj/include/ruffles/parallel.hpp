#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace ruffles {

// Worker count resolution: explicit CLI/API value wins, then the
// RUFFLES_WORKERS environment variable, then 1.
inline int default_worker_count() {
  if (const char* env = std::getenv("RUFFLES_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// Splits [0, count) into one contiguous chunk per worker and runs
// fn(worker_index, begin, end) on each. Callers must merge per-worker
// results with an order-independent reduction so that the outcome is
// identical for every worker count. A worker exception is rethrown on the
// calling thread (lowest worker index wins).
template <class Fn>
void run_partitioned(std::int64_t count, int workers, Fn&& fn) {
  if (count <= 0) return;
  if (workers > count) workers = static_cast<int>(count);
  if (workers <= 1) {
    fn(0, std::int64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  const std::int64_t chunk = count / workers;
  const std::int64_t rem = count % workers;
  std::int64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t len = chunk + (w < rem ? 1 : 0);
    pool.emplace_back([&fn, &errors, w, begin, end = begin + len] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
    begin += len;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ruffles
