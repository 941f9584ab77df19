#pragma once

#include <cstddef>
#include <functional>

namespace hrnr::detail {

/// Number of worker threads: min(HRNR_THREADS, hardware_concurrency), at least 1.
std::size_t thread_count();

/// Runs fn(i) for i in [0, count). Each index writes only to its own slot, so
/// the result is identical for any thread count. Exceptions are rethrown on the
/// calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hrnr::detail
