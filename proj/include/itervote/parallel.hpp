#pragma once

#include <functional>

namespace itervote {

// ITERVOTE_THREADS caps the pool; otherwise hardware concurrency.
int default_threads();

// Calls body(i) for i in [0, count) on up to `threads` workers.
// Callers write results into per-index slots so the outcome does not depend on scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace itervote
