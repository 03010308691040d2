#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hck {

/// Worker count from HCK_JOBS, defaulting to 1.
std::size_t default_jobs();

/// Calls body(i) for i in [0, n) on up to `jobs` threads. Callers write
/// results into slot i so that output order never depends on scheduling.
/// The first exception thrown by any task is rethrown after all workers join.
template <class Body>
void parallel_for(std::size_t n, std::size_t jobs, Body&& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const std::size_t count = jobs < n ? jobs : n;
  for (std::size_t t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hck
