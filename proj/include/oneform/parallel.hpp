#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace oneform {

// ONEFORM_WORKERS overrides the hardware default.  Results never depend on
// this value: samples are keyed by index and reduced in index order.
inline int worker_count() {
    if (const char* env = std::getenv("ONEFORM_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// static block partition of [0, n); fn(state, i) runs with one state object
// per worker
template <typename State>
void parallel_samples(int n, int workers,
                      const std::function<void(State&, int)>& fn) {
    if (workers <= 1) {
        State st;
        for (int i = 0; i < n; ++i) fn(st, i);
        return;
    }
    std::vector<std::thread> pool;
    const int block = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = w * block, hi = std::min(n, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] {
            State st;
            for (int i = lo; i < hi; ++i) fn(st, i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace oneform
