// parallel.hpp: plane-parallel loop helper. LELAB_THREADS caps the worker
// count (default 1 = serial). Work items must write disjoint outputs;
// reductions stay per-item so results do not depend on the thread count.
#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace lelab {

inline int max_threads() {
    static const int n = [] {
        if (const char* e = std::getenv("LELAB_THREADS")) {
            int v = std::atoi(e);
            if (v >= 1) return v;
        }
        return 1;
    }();
    return n;
}

// Calls fn(i) for i in [0, count). Partitioning never affects results.
template <class Fn>
void parallel_for(int count, Fn&& fn) {
    const int nt = std::min(max_threads(), count);
    if (nt <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < count; i += nt) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace lelab
