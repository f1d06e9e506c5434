#pragma once

#include <functional>

namespace edmatch {

// Number of worker threads honored by parallel_for. Reads EDMATCH_THREADS
// once; 0 or unset means hardware concurrency.
int thread_budget();

// Runs fn(0..n-1). Work items must be independent; results are identical
// to the serial loop regardless of scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace edmatch
