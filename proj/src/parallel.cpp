/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace crsim {

int worker_count()
{
    if (const char* env = std::getenv("CRSIM_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for_blocks(std::uint64_t n_blocks, int workers,
                         const std::function<void(std::uint64_t)>& fn)
{
    if (workers <= 0)
        workers = worker_count();
    if (workers == 1 || n_blocks <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b)
            fn(b);
        return;
    }
    const auto n_threads = static_cast<std::uint64_t>(workers) < n_blocks
                               ? static_cast<std::uint64_t>(workers)
                               : n_blocks;
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::uint64_t t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t b = next.fetch_add(1);
                if (b >= n_blocks || failed.load())
                    return;
                try {
                    fn(b);
                } catch (...) {
                    if (!failed.exchange(true))
                        error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (failed.load() && error)
        std::rethrow_exception(error);
}

} // namespace crsim
