#pragma once

// Fixed worker pool over an index range. Results land in index order, so output does not
// depend on which worker finished first.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace pairwave::cli {

// PAIRWAVE_THREADS if set and positive, else the hardware concurrency.
inline int default_threads() {
    if (const char* env = std::getenv("PAIRWAVE_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

template <class R, class F>
std::vector<R> parallel_map(std::size_t n, int threads, F&& fn) {
    std::vector<R> out(n);
    const std::size_t workers = std::min<std::size_t>(std::max(1, threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace pairwave::cli
