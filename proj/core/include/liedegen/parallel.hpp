#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace liedegen {

/// Worker cap for internal parallelism: LIEDEGEN_THREADS when set (values
/// < 1 mean serial), hardware concurrency otherwise.
inline std::size_t parallel_workers() {
    if (const char* env = std::getenv("LIEDEGEN_THREADS")) {
        const long v = std::atol(env);
        return v < 1 ? 1 : static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Applies `fn` to every index in [0, count) and collects the results in
/// index order, so reports stay deterministic regardless of scheduling.
/// All inputs must be immutable; small batches run serially.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, Fn&& fn) {
    std::vector<R> results;
    results.reserve(count);
    const std::size_t workers = std::min(parallel_workers(), count == 0 ? 1 : count);
    if (workers <= 1 || count < 8) {
        for (std::size_t i = 0; i < count; ++i) results.push_back(fn(i));
        return results;
    }
    for (std::size_t i = 0; i < count; ++i) results.push_back(R{});
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) results[i] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace liedegen
