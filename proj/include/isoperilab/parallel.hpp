#pragma once

#include <cstddef>
#include <functional>

namespace isoperilab {

/// Worker count: ISOPERILAB_THREADS when set (clamped to [1, 256]), otherwise
/// the hardware concurrency, never less than 1.
int thread_budget();

/// Runs fn(0..count-1) across the thread budget. Callers must make fn(i)
/// touch only per-index state so results are deterministic regardless of the
/// schedule. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace isoperilab
