#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polystab {

// Worker count: hardware concurrency capped by the POLYSTAB_THREADS
// environment variable (a value of 1 forces fully serial execution).
inline std::size_t worker_count() {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("POLYSTAB_THREADS")) {
    const long req = std::atol(env);
    if (req >= 1 && static_cast<std::size_t>(req) < n)
      n = static_cast<std::size_t>(req);
    if (req >= 1 && static_cast<std::size_t>(req) >= n && req <= 256)
      n = static_cast<std::size_t>(req);
  }
  return n;
}

// Run body(i) for i in [0, count).  Results must be written to
// index-addressed slots so the output is independent of scheduling.
// The first exception thrown by any worker is rethrown on the caller.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t workers = std::min(worker_count(), count ? count : 1);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace polystab
