#pragma once

#include <cstddef>
#include <functional>

namespace hyperheat {

/// Worker count taken from HYPERHEAT_THREADS (default 1, clamped to [1, 256]).
std::size_t thread_count();

/// Calls body(i) for i in [0, count), split into contiguous chunks over
/// thread_count() workers. Bodies must write disjoint outputs; any reduction
/// happens afterwards in the caller, so results do not depend on the worker count.
/// The first exception thrown by a body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hyperheat
