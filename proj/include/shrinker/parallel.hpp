#pragma once

#include <cstddef>
#include <functional>

namespace shrinker {

// Worker cap from SHRINKER_SPECTRA_THREADS, else hardware concurrency.
std::size_t worker_count();

// Calls fn(i) for i in [0, n) on up to `threads` threads. Indices are split
// into contiguous blocks so each i is handled exactly once.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace shrinker
