#pragma once

#include <cstddef>
#include <functional>

namespace vfa {

/// Thread cap: min(omp_get_max_threads(), $VFA_THREADS if set).
int max_threads();

/// Runs body(t) for t in [0, count). When parallel, iterations are spread
/// over OpenMP threads; each iteration must write only to its own slot so
/// that a later in-order reduction is bit-identical to the serial run.
void run_trials(std::size_t count, bool parallel,
                const std::function<void(std::size_t)>& body);

}  // namespace vfa
