#pragma once

#include <cstddef>
#include <functional>

namespace slrt {

/// Worker count: `requested` if nonzero, else hardware concurrency, capped
/// by the SINGULAR_LRT_THREADS environment variable when set.
unsigned resolve_thread_count(unsigned requested = 0);

/// Calls body(begin, end) over contiguous chunks of [0, count). The chunk
/// layout depends only on count and the thread count, and bodies must write
/// disjoint outputs, so results never depend on scheduling.
void parallel_for_chunks(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace slrt
