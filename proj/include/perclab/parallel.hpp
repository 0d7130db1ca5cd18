#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace perclab {

/// Worker count for the CLI: PERCLAB_WORKERS when set, otherwise the
/// hardware concurrency. Library functions take the count explicitly.
inline int default_workers() {
    if (const char* env = std::getenv("PERCLAB_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Counts indices in [0, total) satisfying pred, splitting the range into
/// contiguous chunks across workers. The reduction is a plain sum, so the
/// result does not depend on the worker count.
template <typename Pred>
long long parallel_count(long long total, int workers, Pred pred) {
    if (workers < 1)
        workers = 1;
    if (workers == 1 || total < 2 * workers) {
        long long c = 0;
        for (long long i = 0; i < total; ++i)
            if (pred(i))
                ++c;
        return c;
    }
    std::vector<long long> counts(workers, 0);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        long long lo = total * w / workers;
        long long hi = total * (w + 1) / workers;
        threads.emplace_back([&, lo, hi, w] {
            long long c = 0;
            for (long long i = lo; i < hi; ++i)
                if (pred(i))
                    ++c;
            counts[w] = c;
        });
    }
    for (auto& t : threads)
        t.join();
    long long c = 0;
    for (long long x : counts)
        c += x;
    return c;
}

}  // namespace perclab
