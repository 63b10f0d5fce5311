#pragma once

#include <cstddef>
#include <functional>

namespace xgate {

/// Worker count: XGATE_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
int thread_count();

/// Run fn(i) for i in [0, n) on up to thread_count() workers. fn must write
/// only to its own slot of any shared output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace xgate
