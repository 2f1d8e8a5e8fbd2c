#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace srdef {

/// Run fn(i) for i in [0, n) on up to `jobs` threads. Results must be written
/// to pre-sized slots so the outcome is independent of scheduling.
template <typename F>
void parallel_for(std::size_t n, int jobs, F fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    int t = std::min<std::size_t>(jobs, n);
    threads.reserve(t);
    for (int i = 0; i < t; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
}

}  // namespace srdef
