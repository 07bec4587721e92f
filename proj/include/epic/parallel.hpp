#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace epic {

// Runs fn(i) for i in [begin, end) over `workers` threads, contiguous chunks.
// Callers only use this where iterations write disjoint outputs, so the
// result is identical for any worker count.
inline void parallel_for(int begin, int end, int workers, const std::function<void(int)>& fn) {
    const int n = end - begin;
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    workers = std::min(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const int lo = begin + (int)((int64_t)n * w / workers);
        const int hi = begin + (int)((int64_t)n * (w + 1) / workers);
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace epic
