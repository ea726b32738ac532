#pragma once

#include <cstddef>
#include <functional>

namespace levyarc {

// Worker count: LEVY_ARCSINE_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_budget();

// Calls body(i) for i in [0, n). Work is split into contiguous blocks, so
// results written by index are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace levyarc
