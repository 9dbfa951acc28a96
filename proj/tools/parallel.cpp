#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace switchscan {

Executor thread_executor(std::size_t workers) {
  if (workers <= 1) return serial_executor();
  return [workers](std::size_t count, const std::function<void(std::size_t)>& body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto run = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard guard(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::jthread> team;
    for (std::size_t w = 1; w < std::min(workers, count); ++w) team.emplace_back(run);
    run();
    team.clear();
    if (failure) std::rethrow_exception(failure);
  };
}

std::size_t default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace switchscan
