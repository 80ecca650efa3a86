#pragma once

#include <cstddef>
#include <functional>

namespace suffup {

/// Worker count from SUFFUP_THREADS, falling back to hardware concurrency.
std::size_t default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 means
/// default_thread_count()). Each index runs exactly once; callers write
/// results into slot i so the outcome does not depend on scheduling.
/// The first exception thrown by a body is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace suffup
