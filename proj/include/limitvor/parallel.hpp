#pragma once

#include <cstddef>
#include <functional>

namespace limitvor {

// Worker count: LIMITVOR_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Runs f(i) for i in [0, n). Each index runs exactly once; callers write
// results into per-index slots so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace limitvor
