#pragma once

// Deterministic fork-join helper: results are written into caller-owned slots
// indexed by task number, so the merge order never depends on scheduling.
// Thread count is capped by the HORNLAB_THREADS environment variable.

#include <cstdlib>
#include <thread>
#include <vector>

namespace hornlab {

inline unsigned thread_budget() {
    if (const char* env = std::getenv("HORNLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    const unsigned threads = std::min<std::size_t>(thread_budget(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) {
                body(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

} // namespace hornlab
