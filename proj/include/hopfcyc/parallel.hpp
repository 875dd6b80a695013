#pragma once
#include <functional>

namespace hopfcyc {

// Number of worker threads: HOPFCYC_THREADS env var, default 1 (sequential).
int thread_count();

// Runs fn(i) for i in [0, n) over the worker pool. Results must be written to
// per-index slots by the caller, so the outcome is identical for any thread
// count. Exceptions are re-thrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace hopfcyc
