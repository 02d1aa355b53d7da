#pragma once

#include <cstddef>
#include <functional>

namespace rfl {

/// Worker cap: RFL_THREADS if set and positive, otherwise hardware concurrency.
unsigned worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, count). Chunk
/// boundaries depend only on count and the worker cap, never on timing.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

/// Pairwise summation; result depends only on the input order.
double pairwise_sum(const double* values, std::size_t count);

}  // namespace rfl
