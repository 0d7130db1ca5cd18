#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "perclab/gadgets.hpp"
#include "perclab/graph.hpp"
#include "perclab/maxflow.hpp"
#include "perclab/rational.hpp"

namespace perclab {

/// d(G) = |E| / |V|, exactly.
inline Rational density(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("density: empty graph");
    return Rational(g.edge_count(), g.vertex_count());
}

/// The piecewise closed form the extremal gadgets achieve:
/// (6t^2-14t+12)/(3t^2-4t+8) for even t, (2t^2-4t+2)/(t^2-t+2) for odd t.
inline Rational eta(int t) {
    if (t < 4)
        throw std::invalid_argument("eta: t must be at least 4");
    std::int64_t tt = t;
    if (t % 2 == 0)
        return Rational(6 * tt * tt - 14 * tt + 12, 3 * tt * tt - 4 * tt + 8);
    return Rational(2 * tt * tt - 4 * tt + 2, tt * tt - tt + 2);
}

enum class DensityMethod { bruteforce, flow };

struct DensityReport {
    Rational value;
    VertexSet witness;
    DensityMethod method = DensityMethod::bruteforce;
};

/// Exact maximum subgraph density by subset enumeration. Induced subsets
/// suffice: adding edges on a fixed vertex set never lowers density, so
/// the edge-maximal (induced) subgraph dominates each vertex set. Subsets
/// are walked in Gray-code order with an incremental edge count.
inline DensityReport max_density_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("max_density_bruteforce: empty graph");
    if (n > 26)
        throw std::invalid_argument("max_density_bruteforce: vertex count beyond enumeration budget");

    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        g.for_each_neighbor(v, [&](int u) { adj[v] |= std::uint32_t(1) << u; });

    std::uint32_t cur = 0;
    int size = 0;
    long long inside = 0;
    std::uint32_t best_mask = 1;
    long long best_e = 0;
    int best_size = 1;

    const std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        int v = std::countr_zero(k);
        std::uint32_t bit = std::uint32_t(1) << v;
        if (cur & bit) {
            cur ^= bit;
            inside -= std::popcount(adj[v] & cur);
            --size;
        } else {
            inside += std::popcount(adj[v] & cur);
            cur ^= bit;
            ++size;
        }
        if (size > 0 && inside * best_size > best_e * size) {
            best_mask = cur;
            best_e = inside;
            best_size = size;
        }
    }

    DensityReport out;
    out.value = Rational(best_e, best_size);
    out.witness = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (best_mask & (std::uint32_t(1) << v))
            out.witness.insert(v);
    out.method = DensityMethod::bruteforce;
    return out;
}

namespace detail {

// One min-cut feasibility probe: is there a nonempty S with d(S) > g for
// the guess g = a/b? Capacities are scaled by b so everything stays
// integral: source->v at m*b, v->sink at m*b + 2a - b*deg(v), both arc
// directions of each edge at b. A cut below n*m*b exposes such an S as
// the source side.
inline bool denser_subgraph_exists(const Graph& g, std::int64_t a, std::int64_t b, VertexSet& out) {
    const int n = g.vertex_count();
    const long long m = g.edge_count();
    MaxFlow net(n + 2);
    const int src = n, snk = n + 1;
    for (int v = 0; v < n; ++v) {
        net.add_edge(src, v, m * b);
        net.add_edge(v, snk, m * b + 2 * a - b * g.degree(v));
    }
    for (auto [u, v] : g.edges()) {
        net.add_edge(u, v, b);
        net.add_edge(v, u, b);
    }
    long long flow = net.run(src, snk);
    if (flow >= static_cast<long long>(n) * m * b)
        return false;
    auto side = net.source_side(src);
    out = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (side[v])
            out.insert(v);
    return !out.empty();
}

}  // namespace detail

/// Exact maximum subgraph density via repeated min-cut probes. Guesses
/// are snapped to denominator 4n^2 so rationals never grow, and the
/// bracket [lo, hi] keeps lo an achieved density and hi a valid upper
/// bound; distinct subgraph densities differ by at least 1/n^2, so the
/// loop stops once hi - lo drops below that separation.
inline DensityReport max_density_flow(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("max_density_flow: empty graph");

    DensityReport out;
    out.method = DensityMethod::flow;
    out.witness = VertexSet::full(n);
    out.value = density(g);
    if (n == 1 || g.edge_count() == 0)
        return out;

    const std::int64_t grid = 4LL * n * n;
    Rational lo = out.value;
    Rational hi(n - 1, 2);
    const Rational sep(1, static_cast<std::int64_t>(n) * n);

    while (hi - lo >= sep) {
        Rational mid = (lo + hi) * Rational(1, 2);
        // floor(mid * grid) / grid, strictly inside (lo, hi)
        __int128 num = static_cast<__int128>(mid.num()) * grid;
        std::int64_t q = static_cast<std::int64_t>(num / mid.den());
        Rational guess(q, grid);
        if (!(lo < guess))
            guess = lo + sep * Rational(1, 4);

        VertexSet side(n);
        if (detail::denser_subgraph_exists(g, guess.num(), guess.den(), side)) {
            long long e = count_induced_edges(g, side);
            Rational found(e, side.count());
            if (!(found > guess))
                throw std::logic_error("max_density_flow: probe returned a non-improving set");
            lo = found;
            out.value = found;
            out.witness = side;
        } else {
            hi = guess;
        }
    }
    return out;
}

struct CandidateDensity {
    std::string label;
    VertexSet set;
    long long edges = 0;
    Rational value;
};

/// The seven vertex sets the extremal analysis reduces to, with their
/// exact induced densities on the t-gadget. A and B and C are the unions
/// of closed neighborhoods of the u-, v- and w-spokes; note the hub u
/// lies in B and the hub v lies in C through the join edges.
inline std::vector<CandidateDensity> seven_candidate_densities(int t) {
    if (t < 4)
        throw std::invalid_argument("seven_candidate_densities: t must be at least 4");
    LabeledGadget ht = build_ht(t);
    const Graph& g = ht.graph;
    const int n = g.vertex_count();

    auto closed_union = [&](char block) {
        VertexSet s(n);
        for (int spoke : ht.spokes(block)) {
            s.insert(spoke);
            g.for_each_neighbor(spoke, [&](int x) { s.insert(x); });
        }
        return s;
    };
    VertexSet a = closed_union('u');
    VertexSet b = closed_union('v');
    VertexSet c = closed_union('w');
    int u = ht.hub('u'), v = ht.hub('v'), w = ht.hub('w');

    auto make = [&](std::string label, std::vector<int> hubs,
                    std::vector<const VertexSet*> parts) {
        VertexSet s(n);
        for (int h : hubs)
            s.insert(h);
        for (const VertexSet* p : parts)
            s |= *p;
        CandidateDensity cd;
        cd.label = std::move(label);
        cd.edges = count_induced_edges(g, s);
        cd.value = Rational(cd.edges, s.count());
        cd.set = std::move(s);
        return cd;
    };

    return {
        make("u+A", {u}, {&a}),
        make("v+B", {v}, {&b}),
        make("w+C", {w}, {&c}),
        make("v+A+B", {v}, {&a, &b}),
        make("w+B+C", {w}, {&b, &c}),
        make("u+w+A+C", {u, w}, {&a, &c}),
        make("w+A+B+C", {w}, {&a, &b, &c}),
    };
}

/// 1/m(H): the exponent for which n^{-1/m(H)} is the appearance
/// threshold of H.
inline Rational containment_threshold_exponent(const Graph& h) {
    if (h.edge_count() == 0)
        throw std::invalid_argument("containment_threshold_exponent: graph has no edges");
    Rational m = h.vertex_count() <= 26 ? max_density_bruteforce(h).value : max_density_flow(h).value;
    return m.inverse();
}

}  // namespace perclab
