#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace lmg {

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency). Work is claimed through an atomic counter; callers that
/// need deterministic output write into index-addressed slots.
inline void parallel_for(long count, int threads, const std::function<void(long)>& fn) {
    if (count <= 0) return;
    long workers = threads > 0 ? threads : static_cast<long>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers > count) workers = count;

    if (workers == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<long> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (long w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count || failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace lmg
