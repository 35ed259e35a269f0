#pragma once

#include <functional>

namespace transonic {

// Worker count from TRANSONIC_WORKERS, else the hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, n) across the workers. Iterations must be independent.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace transonic
