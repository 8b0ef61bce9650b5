#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace sinrsim::detail {

inline int resolve_threads(int requested, std::size_t tasks) {
    const unsigned hw = std::thread::hardware_concurrency();
    int t = requested > 0 ? requested : (hw ? static_cast<int>(hw) : 1);
    if (static_cast<std::size_t>(t) > tasks) t = static_cast<int>(tasks);
    return t < 1 ? 1 : t;
}

/// Runs fn(i) for i in [0, count). Work is handed out in contiguous blocks;
/// fn must be safe to call concurrently for distinct i and must not throw.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
    threads = resolve_threads(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t block =
        std::max<std::size_t>(1, count / (static_cast<std::size_t>(threads) * 8));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(block);
            if (begin >= count) return;
            const std::size_t end = std::min(begin + block, count);
            for (std::size_t i = begin; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace sinrsim::detail
