#pragma once

#include <cstddef>
#include <functional>

namespace rectiforce {

/// Calls body(i) for every i in [0, count) on up to `jobs` threads
/// (jobs <= 0 means hardware concurrency). Indices are handed out
/// round-robin by a shared counter, so callers must write results by index.
/// If any call throws, the exception from the lowest failing index is
/// rethrown after all workers have finished.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

/// Worker count actually used for `jobs` and `count` tasks.
int effective_jobs(int jobs, std::size_t count);

}  // namespace rectiforce
