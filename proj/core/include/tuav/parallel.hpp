#pragma once

#include <cstddef>
#include <functional>

namespace tuav {

/// Worker count from TUAV_PLACE_THREADS (0 or unset = hardware concurrency).
unsigned default_thread_count();

/**
 * Runs body(begin, end) over contiguous chunks of [0, n) on up to `threads`
 * workers (0 = default_thread_count()). Chunks are disjoint, so callers that
 * write results by index get output independent of the worker count.
 * Exceptions thrown by body are rethrown on the calling thread.
 */
void parallel_for(std::size_t n, std::function<void(std::size_t, std::size_t)> const& body,
                  unsigned threads = 0);

}  // namespace tuav
