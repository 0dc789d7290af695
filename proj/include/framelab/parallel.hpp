#pragma once

#include <cstddef>
#include <functional>

namespace framelab {

/// Worker count: FRAMELAB_THREADS if set and positive, otherwise the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Runs body(k) for k in [0, n) on up to worker_count() threads. Each index is
/// visited exactly once; body must only write to state owned by index k.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace framelab
