#pragma once

#include <cstddef>
#include <functional>

namespace koszul {

/// Worker count: `requested` if nonzero, else KOSZUL_THREADS if set and nonzero, else the
/// hardware concurrency.
std::size_t resolve_threads(std::size_t requested = 0);

/// Runs body(0..count-1) on up to `threads` workers. The first exception thrown by any task is
/// rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace koszul
