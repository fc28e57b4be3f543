#pragma once

#include <cstddef>
#include <functional>

// Minimal data-parallel loop for independent iterations (profile sweeps,
// verification batteries). Deterministic output: callers write to disjoint
// slots, so scheduling order never shows.

namespace seqcorr {

/// Runs fn(i) for every i in [0, count). jobs <= 1 runs inline on the calling
/// thread; otherwise up to jobs worker threads stripe the index range. The
/// first exception thrown by any iteration is rethrown after all join.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace seqcorr
