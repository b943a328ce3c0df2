#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qhilb {

/// Evaluates fn(0) ... fn(count - 1) on up to `threads` workers and returns
/// the results in index order, so any later reduction is deterministic.
/// The first exception thrown by a worker is rethrown on the caller.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<T> results(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned n = threads < count ? threads : static_cast<unsigned>(count);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace qhilb
