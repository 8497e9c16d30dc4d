#ifndef QPOCH_PARALLEL_HPP
#define QPOCH_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qpoch {

/// Runs fn(i) for every i in [0, tasks) on up to `workers` threads. Tasks
/// are claimed dynamically; callers write results into slot i, so the
/// outcome does not depend on scheduling. The first exception thrown by
/// any task is rethrown on the calling thread after all workers stop.
template <typename Fn>
void parallel_for(std::size_t workers, std::size_t tasks, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, tasks));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks; ++i) {
      fn(i);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks || failed.load()) {
        return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        failed.store(true);
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    pool.emplace_back(run);
  }
  run();
  pool.clear();  // joins

  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace qpoch

#endif  // QPOCH_PARALLEL_HPP
