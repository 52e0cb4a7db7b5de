#pragma once

#include <cstdint>
#include <functional>

namespace dwe {

// Process-wide worker cap, set once by the CLI (--threads / DWECHO_THREADS).
// 0 means hardware concurrency.
void set_thread_count(int n);
int thread_count();

// Static partition of [0, n) over the worker threads. Each index is handled
// by exactly one thread and writes only its own outputs, so results do not
// depend on the thread count.
void parallel_for(int64_t n, const std::function<void(int64_t begin, int64_t end)>& body);

}  // namespace dwe
