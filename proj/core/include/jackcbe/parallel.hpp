#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jackcbe {

/// Number of workers used by parallel_for; 0 means hardware concurrency.
/// Starts from the JACKCBE_THREADS environment variable when set.
inline unsigned& parallel_workers() {
  static unsigned n = [] {
    const char* env = std::getenv("JACKCBE_THREADS");
    return env ? static_cast<unsigned>(std::strtoul(env, nullptr, 10)) : 0u;
  }();
  return n;
}

/// Calls body(i) for i in [0, count) on a small thread pool. Each index is
/// processed exactly once; results must be written to per-index slots so the
/// outcome does not depend on scheduling. The first exception is rethrown.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  unsigned workers = parallel_workers() ? parallel_workers() : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::size_t>(count, 64))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace jackcbe
