#pragma once

#include <cstdint>
#include <functional>

namespace arbor {

/// Worker threads for the exhaustive checks: ARBOR_WORKERS if set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
int worker_count();

/// Calls body(i) for every i in [0, count), split into contiguous blocks
/// across worker_count() threads. The first exception thrown is rethrown.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body);

}  // namespace arbor
