#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dcad {

inline unsigned hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs f(begin, end) over contiguous chunks of [0, n). Results must be
/// written by index so the partitioning cannot affect output.
template <typename F>
inline void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    f(static_cast<std::size_t>(0), n);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  const std::size_t base = n / threads;
  const std::size_t extra = n % threads;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  std::exception_ptr error;
  std::mutex error_mutex;
  std::size_t begin = 0;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t len = base + (t < extra ? 1 : 0);
    const std::size_t end = begin + len;
    workers.emplace_back([&, begin, end] {
      try {
        f(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dcad
