#pragma once

#include <cstddef>
#include <functional>

namespace switchscan {

/// Runs body(i) for every i in [0, count), possibly concurrently, and returns
/// once all calls have finished. The library never creates threads itself;
/// callers that want parallelism pass an executor backed by their own pool.
using Executor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

inline Executor serial_executor() {
  return [](std::size_t count, const std::function<void(std::size_t)>& body) {
    for (std::size_t i = 0; i < count; ++i) body(i);
  };
}

}  // namespace switchscan
