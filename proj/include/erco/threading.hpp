#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace erco {

// Runs fn(worker_id, job) for job in [0, jobs). Workers claim jobs from a
// shared counter; with threads <= 1 everything runs on the calling thread.
inline void parallel_for(int jobs, int threads, const std::function<void(int, int)>& fn) {
    if (jobs <= 0) return;
    if (threads <= 1 || jobs == 1) {
        for (int j = 0; j < jobs; ++j) fn(0, j);
        return;
    }
    int nworkers = std::min(threads, jobs);
    std::atomic<int> next{0};
    auto work = [&](int wid) {
        for (;;) {
            int j = next.fetch_add(1, std::memory_order_relaxed);
            if (j >= jobs) break;
            fn(wid, j);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nworkers - 1);
    for (int w = 1; w < nworkers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
}

}  // namespace erco
