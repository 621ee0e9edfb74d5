#pragma once

#include <cstddef>
#include <functional>

namespace melfs {

/// Evaluator concurrency: hardware concurrency capped by the MELFS_THREADS
/// environment variable (a value of 1 forces serial execution).
std::size_t evaluator_threads();

/// Runs fn(i) for i in [0, n) on up to evaluator_threads() workers. Results
/// must be written to disjoint slots; fn must not touch shared mutable
/// state. Rethrows the first worker exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace melfs
