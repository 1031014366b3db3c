#pragma once

#include <cstddef>
#include <functional>

namespace nakajima {

// Runs f(0), ..., f(n-1) on up to `jobs` threads.  Callers write results
// into index-addressed slots, so output never depends on scheduling.
// The first exception thrown by any task is rethrown after all threads join.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& f);

}  // namespace nakajima
