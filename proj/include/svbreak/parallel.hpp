#pragma once

#include <cstddef>
#include <functional>

namespace svbreak {

// Worker budget: hardware concurrency, capped by the WORKBENCH_THREADS
// environment variable when set. Always at least 1.
std::size_t worker_count();

// Runs fn(begin, end) over disjoint chunks of [0, n). fn must be safe to
// call concurrently on disjoint ranges. Small ranges run inline.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace svbreak
