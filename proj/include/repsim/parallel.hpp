#pragma once

#include <cstdint>
#include <functional>

namespace repsim {

/// Caps the number of worker threads used by parallel_for. 0 restores the
/// hardware default. Intended for tests and benchmarking.
void set_max_threads(int n);
int max_threads();

/// Runs fn(i) for every i in [0, n). Work items must be independent and
/// write only to their own output slot; under that contract the result is
/// identical for any thread count, including 1.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace repsim
