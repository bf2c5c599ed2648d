#pragma once

#include <cstddef>
#include <functional>

namespace szlenklab {

// Worker count: min(hardware, SZLENK_LAB_THREADS when set). At least 1.
int worker_count();

// Runs fn(i) for i in [0, count). Work items must be independent; callers
// keep determinism by writing results into preallocated slots by index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace szlenklab
