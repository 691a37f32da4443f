#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace rnaforge {

// Index-based parallel loop. Work items must be independent; callers that
// aggregate results do so into index-addressed slots afterwards, so the
// outcome is identical for any worker count.
template <typename Fn>
void parallel_for(size_t count, unsigned threads, Fn&& fn) {
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = threads;
    if (static_cast<size_t>(workers) > count) workers = static_cast<unsigned>(count);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

// Worker count resolution: RNAFORGE_THREADS env overrides the requested
// value; 0 means "use hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
    if (const char* env = std::getenv("RNAFORGE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 0) requested = static_cast<unsigned>(v);
    }
    if (requested == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        requested = hc > 0 ? hc : 1;
    }
    return requested;
}

}  // namespace rnaforge
