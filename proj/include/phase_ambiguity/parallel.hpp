#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace phase_ambiguity {

/// Caps worker threads used by the library; 0 means hardware concurrency.
void set_thread_limit(std::size_t limit) noexcept;
std::size_t thread_limit() noexcept;

/// Calls body(i) for i in [0, count) across worker threads. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t min_parallel = 256);

}  // namespace phase_ambiguity
