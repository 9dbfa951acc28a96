#pragma once

#include <cstddef>

#include "switchscan/executor.hpp"

namespace switchscan {

/// Executor running each batch on `workers` threads that pull task indices
/// from a shared counter. workers <= 1 gives the serial executor.
Executor thread_executor(std::size_t workers);

std::size_t default_workers();

}  // namespace switchscan
