#ifndef ENTLOC_PARALLEL_HPP
#define ENTLOC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace entloc {

// Number of worker threads: the NOISE_LOCALIZE_THREADS environment variable
// when set to a positive integer, otherwise the hardware concurrency.
std::size_t thread_cap();

// Runs fn(0) ... fn(n-1), possibly across threads. Each index owns its own
// output slot, so results are deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

} // namespace entloc

#endif
