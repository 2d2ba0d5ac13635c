#pragma once

/**
 * @file threads.hpp
 * @brief Minimal data-parallel loop with an environment-controlled cap.
 *
 * GREENRING_THREADS limits the worker count (default: hardware threads).
 * parallel_for hands out indices atomically; the callback must only touch
 * state owned by its index (e.g. a preallocated result slot).
 */

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace greenring {

inline unsigned worker_count() {
  if (const char* env = std::getenv("GREENRING_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v > 256 ? 256 : v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

template <typename Fn>
void parallel_for(int64_t count, Fn&& fn) {
  if (count <= 0) return;
  int64_t workers = static_cast<int64_t>(worker_count());
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int64_t w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace greenring
