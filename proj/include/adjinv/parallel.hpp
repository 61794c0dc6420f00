#pragma once

/**
 * @file parallel.hpp
 * @brief Static block partitioning over std::thread.
 *
 * Work items are split into contiguous blocks, one per worker. Each item
 * writes its own output slot, so results never depend on the schedule.
 */

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace adjinv {

/// Knobs shared by every minor-sum routine.
struct ComputeOptions {
    /// Worker cap; 0 or 1 runs inline on the calling thread.
    unsigned threads = 1;
};

inline unsigned default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Calls fn(i) for every i in [0, count), spread over at most `threads` workers.
/// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                try {
                    for (std::size_t i = begin; i < end; ++i) fn(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace adjinv
