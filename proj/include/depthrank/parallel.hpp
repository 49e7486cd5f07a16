#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace depthrank {

inline unsigned resolve_threads(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, count) across up to `threads` workers. Work is
// handed out in contiguous blocks; the first exception thrown by any worker
// is rethrown on the caller. Results must be written to per-index slots by
// the callers' fn, which keeps the outcome independent of scheduling.
template <typename Fn>
inline void parallel_for(std::size_t count, int threads, Fn&& fn) {
    unsigned nthreads = resolve_threads(threads);
    if (nthreads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (nthreads > count) nthreads = static_cast<unsigned>(count);

    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    std::exception_ptr error;
    std::mutex error_mutex;
    std::size_t chunk = (count + nthreads - 1) / nthreads;

    for (unsigned t = 0; t < nthreads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi]() {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace depthrank
