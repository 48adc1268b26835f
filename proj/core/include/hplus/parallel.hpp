#pragma once

#include <cstddef>
#include <functional>

namespace hplus {

/// Worker count: $HPLUS_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs task(0) .. task(count-1) on up to `threads` workers. Tasks must write
/// to disjoint outputs; the first exception thrown is rethrown after joining.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task, unsigned threads = 0);

}  // namespace hplus
