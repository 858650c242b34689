#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ocoh {

/// Worker count for embarrassingly parallel loops, from OCOH_THREADS (default 1).
inline int thread_count() {
    static const int n = [] {
        const char* env = std::getenv("OCOH_THREADS");
        if (!env) return 1;
        const int v = std::atoi(env);
        return v >= 1 ? v : 1;
    }();
    return n;
}

/// Runs body(i) for i in [0, n); bodies must not share mutable state.
inline void parallel_for(int n, const std::function<void(int)>& body) {
    const int workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) body(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace ocoh
