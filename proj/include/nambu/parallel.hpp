#pragma once

#include <cstddef>
#include <functional>

namespace nambu {

// Worker count: NAMBU_WEIL_THREADS if set (clamped to [1,64]), else hardware
// concurrency.
std::size_t thread_count();

// Runs fn(chunk_index, begin, end) over a partition of [0, n) on up to
// thread_count() threads. Chunk boundaries depend only on n and the thread
// count; callers merge per-chunk results in chunk order, so reports stay
// byte-identical at any thread setting.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace nambu
