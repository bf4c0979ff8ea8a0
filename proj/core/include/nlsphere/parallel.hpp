#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nlsphere {

/// Worker count for internal loops. Honors NLSPHERE_THREADS when set to a
/// positive integer, otherwise uses the hardware concurrency.
unsigned thread_limit();

/// Runs fn(i) for i in [0, count) on up to thread_limit() threads. Indices
/// are handed out dynamically, so fn must only write state owned by i.
/// The first exception thrown by any fn is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, std::size_t min_per_thread = 1)
{
    const std::size_t workers = std::min<std::size_t>(
        thread_limit(), min_per_thread == 0 ? count : count / min_per_thread);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
        body();
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace nlsphere
