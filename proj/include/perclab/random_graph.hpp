#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "perclab/graph.hpp"

namespace perclab {

namespace rng {

// splitmix64 finalizer; the workhorse of the counter-based streams
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based uniform draw: value k of the stream named `seed`.
/// Streams never carry state, so any draw is reachable directly, in any
/// order, from any worker.
inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed ^ mix64(counter + 0xD1B54A32D192ED03ULL));
}

/// The per-trial substream of a master seed.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    return at(master, trial);
}

}  // namespace rng

/// Erdos-Renyi sample: every vertex pair is present independently with
/// probability p. The pair uniforms depend only on (seed, pair index),
/// not on p, so samples at increasing p on one seed are nested - the
/// coupling the monotonicity harness relies on.
inline Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0)
        throw std::invalid_argument("sample_gnp: negative vertex count");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("sample_gnp: probability outside [0,1]");

    std::vector<std::pair<int, int>> edges;
    if (p > 0.0) {
        const long double scale = 18446744073709551616.0L;  // 2^64
        long double t = static_cast<long double>(p) * scale;
        const bool all = t >= scale;
        const std::uint64_t threshold = all ? ~std::uint64_t(0) : static_cast<std::uint64_t>(t);
        std::uint64_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (all || rng::at(seed, k) < threshold)
                    edges.emplace_back(i, j);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace perclab
