#pragma once

#include <cstddef>
#include <functional>

namespace dimred {

/// Number of workers to use when the caller passes 0: DIMRED_THREADS if set, else hardware concurrency.
unsigned resolve_thread_count(unsigned requested);

/**
 * Run body(i) for every i in [0, n) on up to `threads` workers.
 *
 * Tasks are claimed dynamically, so body must write only to slot i of any
 * shared output. The first exception thrown by a task is rethrown after all
 * workers have joined.
 */
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace dimred
