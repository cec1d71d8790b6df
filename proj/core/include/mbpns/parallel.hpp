#ifndef MBPNS_PARALLEL_HPP_
#define MBPNS_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mbpns {

// Worker count: MBPNS_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
unsigned thread_count();

// Calls body(i) for i in [0, n) across up to thread_count() threads. Each index
// is visited exactly once; callers write results by index, so the outcome does
// not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace mbpns

#endif  // MBPNS_PARALLEL_HPP_
