#pragma once

#include <cstddef>
#include <functional>

namespace lens {

/// Worker count: LENS_SCATTER_THREADS when set to a positive integer, else the
/// hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n) across thread_count() workers. Bodies must only
/// write to per-index state. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lens
