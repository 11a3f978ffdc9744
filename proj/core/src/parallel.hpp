#ifndef RPISO_SRC_PARALLEL_HPP_
#define RPISO_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rpiso::detail {

// Runs body(i) for i in [0, count).  Each index is written by exactly one
// worker, so results stored by index do not depend on the thread count.
// The first exception (by worker order) is rethrown after all workers join.
template <class F>
void parallel_for(std::size_t count, const F& body) {
  constexpr std::size_t kMinPerWorker = 32;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, count / kMinPerWorker + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace rpiso::detail

#endif  // RPISO_SRC_PARALLEL_HPP_
