#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rigidity {

/// jobs <= 0 means the available hardware parallelism.
inline int resolve_jobs(int jobs) {
    if (jobs > 0) {
        return jobs;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any task is rethrown after all threads join.
template <typename Body>
void parallel_for(int count, int jobs, Body&& body) {
    const int workers = std::min(resolve_jobs(jobs), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                        next = count;
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace rigidity
