#ifndef HEXF_PARALLEL_HPP
#define HEXF_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hexf {

/// Number of worker threads: HEXF_THREADS if set, hardware concurrency
/// otherwise, never less than 1.
unsigned thread_count();

/// Runs body(begin, end) over a partition of [0, count) on worker threads.
/// Results must be written to disjoint slots; the partition is static so
/// output is identical regardless of thread count.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hexf

#endif
