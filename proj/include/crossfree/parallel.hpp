#pragma once

#include <cstddef>
#include <functional>

namespace crossfree {

// Worker count for internal parallelism: CROSSFREE_THREADS when set to a
// positive integer, else the hardware concurrency (at least 1).
unsigned thread_budget();

// Calls body(i) for every i in [0, count), spread over up to thread_budget()
// workers. Results must not depend on the order in which indices run.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace crossfree
