#pragma once

#include <cstddef>
#include <functional>

namespace admlab {

/// Hardware concurrency, capped by the ADMLAB_THREADS environment variable when set.
unsigned worker_count();

/// Calls task(i) for i in [0, n) on up to `workers` threads. Tasks must write to disjoint
/// outputs. The first exception thrown by a task is rethrown after all threads join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task, unsigned workers = worker_count());

}  // namespace admlab
