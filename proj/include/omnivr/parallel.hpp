#pragma once

#include <cstddef>
#include <functional>

namespace omnivr {

/// Worker count: OMNIVR_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(begin, end) over contiguous chunks of [0, n), possibly on
/// several threads. Chunks never overlap, so per-index writes need no locking.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace omnivr
