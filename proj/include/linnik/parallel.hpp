#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace linnik {

inline unsigned default_jobs()
{
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs body(i) for i in [0, n) on up to `jobs` threads. Each index is
// visited exactly once; callers write results into per-index slots so the
// outcome does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body body)
{
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers)
                body(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace linnik
