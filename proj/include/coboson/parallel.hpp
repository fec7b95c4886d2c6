#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coboson {

/// Evaluates fn(i) for i in [0, count) on up to `jobs` threads and returns the
/// results in index order. Work is handed out by an atomic counter, so the
/// output never depends on scheduling. The first exception (lowest index) is
/// rethrown after all workers stop.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<R> out(count);
  if (count == 0) return out;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  std::size_t err_index = count;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace coboson
