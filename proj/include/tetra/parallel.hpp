#pragma once
/// Minimal deterministic parallel sweep: work items are indexed, workers
/// pull indices from an atomic counter, and callers aggregate results from
/// index-addressed slots so the outcome is independent of scheduling.

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace tetra {

/// Worker count: explicit argument > 0 wins, then the TETRA_THREADS
/// environment variable, then hardware concurrency.
int default_thread_count();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

}  // namespace tetra
