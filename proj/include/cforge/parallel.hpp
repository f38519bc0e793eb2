#pragma once

#include <cstdint>
#include <functional>

namespace cforge {

// Worker count for data-parallel loops. COALITION_FORGE_THREADS overrides;
// 0 or unset means hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, count). Work is split across worker_count()
// threads; fn must write only to its own slot so that results are
// independent of scheduling.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn);

}  // namespace cforge
