#pragma once

#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perclab/graph.hpp"

namespace perclab {

/// One edge addition together with the K_{2,t} copy certifying it: the
/// stored edge is (u,v) where u is a 2-side vertex of the copy, `partner`
/// is the other 2-side vertex and `tset` is the t-side, which contains v.
struct ClosureStep {
    int u = -1;
    int v = -1;
    int partner = -1;
    std::vector<int> tset;
};

struct ClosureTrace {
    std::vector<ClosureStep> steps;
    bool has_rounds = false;
    std::vector<std::vector<int>> rounds;  // step indices per round
};

struct ClosureResult {
    Graph closure;
    ClosureTrace trace;
};

enum class Scheduler { sequential, rounds };

namespace detail {

// Local addability rule for K_{2,t}: the non-edge (u,v) completes a copy
// iff some partner w != u,v has v in N(w) and at least t-1 further common
// neighbors with u, or the same with u and v swapped. Equivalence with
// the generic subgraph-isomorphism oracle is property-tested.
inline std::optional<ClosureStep> find_witness(const AdjacencyMatrix& adj, int t, int u, int v) {
    const int words = adj.row_words();
    auto search = [&](int side, int tvert) -> std::optional<ClosureStep> {
        // side will be a 2-side vertex of the new copy, tvert lands in the t-side
        auto rside = adj.row(side);
        std::vector<int> partners;
        bits::for_each_bit(adj.row(tvert), [&](int w) {
            if (w != side)
                partners.push_back(w);
        });
        for (int w : partners) {
            auto rw = adj.row(w);
            int common = 0;
            for (int i = 0; i < words; ++i) {
                std::uint64_t x = rside[i] & rw[i];
                if (i == (tvert >> 6))
                    x &= ~(std::uint64_t(1) << (tvert & 63));
                common += std::popcount(x);
            }
            if (common >= t - 1) {
                ClosureStep step;
                step.u = side;
                step.v = tvert;
                step.partner = w;
                step.tset.push_back(tvert);
                for (int i = 0; i < words && static_cast<int>(step.tset.size()) < t; ++i) {
                    std::uint64_t x = rside[i] & rw[i];
                    if (i == (tvert >> 6))
                        x &= ~(std::uint64_t(1) << (tvert & 63));
                    while (x && static_cast<int>(step.tset.size()) < t) {
                        step.tset.push_back(i * 64 + std::countr_zero(x));
                        x &= x - 1;
                    }
                }
                std::sort(step.tset.begin(), step.tset.end());
                return step;
            }
        }
        return std::nullopt;
    };
    if (auto s = search(u, v))
        return s;
    return search(v, u);
}

}  // namespace detail

/// Non-edges of G whose insertion creates a new K_{2,t} copy.
inline std::vector<std::pair<int, int>> addable_edges(const Graph& g, int t) {
    if (t < 2)
        throw std::invalid_argument("addable_edges: t must be at least 2");
    AdjacencyMatrix adj(g);
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!adj.adjacent(u, v) && detail::find_witness(adj, t, u, v))
                out.emplace_back(u, v);
    return out;
}

/// K_{2,t}-bootstrap closure with a replayable certificate trace.
///
/// The sequential scheduler keeps a worklist of candidate pairs. When the
/// edge (u,v) lands, the pairs whose addability can change are exactly
/// those involving u or v, plus pairs with one endpoint in N(u) and the
/// other in N(v) (their witness sets may have grown through partner u or
/// v); all of them are re-queued. The round scheduler recomputes the full
/// addable set against a snapshot per round, mirroring the E_i process.
inline ClosureResult close_k2t(const Graph& g, int t, Scheduler sched = Scheduler::sequential) {
    if (t < 2)
        throw std::invalid_argument("close_k2t: t must be at least 2");
    const int n = g.vertex_count();
    AdjacencyMatrix adj(g);
    ClosureTrace trace;

    if (sched == Scheduler::rounds) {
        trace.has_rounds = true;
        for (;;) {
            std::vector<ClosureStep> round;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!adj.adjacent(u, v))
                        if (auto s = detail::find_witness(adj, t, u, v))
                            round.push_back(*s);
            if (round.empty())
                break;
            std::vector<int> idx;
            for (auto& s : round) {
                adj.add_edge(s.u, s.v);
                idx.push_back(static_cast<int>(trace.steps.size()));
                trace.steps.push_back(std::move(s));
            }
            trace.rounds.push_back(std::move(idx));
        }
        return {Graph(std::move(adj)), std::move(trace)};
    }

    std::deque<std::pair<int, int>> pending;
    std::vector<std::uint64_t> queued((std::size_t(n) * n + 63) / 64, 0);
    auto key = [n](int a, int b) {
        if (a > b)
            std::swap(a, b);
        return std::size_t(a) * n + b;
    };
    auto push = [&](int a, int b) {
        if (a == b || adj.adjacent(a, b))
            return;
        std::size_t k = key(a, b);
        if ((queued[k >> 6] >> (k & 63)) & 1)
            return;
        queued[k >> 6] |= std::uint64_t(1) << (k & 63);
        pending.emplace_back(std::min(a, b), std::max(a, b));
    };

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            push(u, v);

    while (!pending.empty()) {
        auto [u, v] = pending.front();
        pending.pop_front();
        std::size_t k = key(u, v);
        queued[k >> 6] &= ~(std::uint64_t(1) << (k & 63));
        if (adj.adjacent(u, v))
            continue;
        auto s = detail::find_witness(adj, t, u, v);
        if (!s)
            continue;
        adj.add_edge(u, v);
        trace.steps.push_back(*s);

        for (int x = 0; x < n; ++x) {
            push(u, x);
            push(v, x);
        }
        std::vector<int> nu, nv;
        bits::for_each_bit(adj.row(u), [&](int a) {
            if (a != v)
                nu.push_back(a);
        });
        bits::for_each_bit(adj.row(v), [&](int b) {
            if (b != u)
                nv.push_back(b);
        });
        for (int a : nu)
            for (int b : nv)
                push(a, b);
    }
    return {Graph(std::move(adj)), std::move(trace)};
}

inline bool is_complete(const Graph& g) { return g.complete(); }

/// Replays a trace from g, checking that every step adds a fresh edge
/// whose witness is a valid K_{2,t} copy in the state right after the
/// addition, and that the final state equals `expected`.
inline bool verify_trace(const Graph& g, int t, const ClosureTrace& trace, const Graph& expected,
                         std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    AdjacencyMatrix adj(g);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        if (s.u == s.v || s.partner == s.u || s.partner == s.v)
            return fail("step " + std::to_string(i) + ": degenerate vertices");
        if (adj.adjacent(s.u, s.v))
            return fail("step " + std::to_string(i) + ": edge already present");
        adj.add_edge(s.u, s.v);
        if (static_cast<int>(s.tset.size()) != t)
            return fail("step " + std::to_string(i) + ": t-set size");
        bool has_v = false;
        for (int x : s.tset) {
            if (x == s.v)
                has_v = true;
            if (x == s.u || x == s.partner)
                return fail("step " + std::to_string(i) + ": t-set touches the 2-side");
            if (!adj.adjacent(s.u, x) || !adj.adjacent(s.partner, x))
                return fail("step " + std::to_string(i) + ": t-set not in the common neighborhood");
        }
        if (!has_v)
            return fail("step " + std::to_string(i) + ": added endpoint missing from t-set");
    }
    Graph replayed(std::move(adj));
    if (!(replayed == expected))
        return fail("replayed graph differs from closure");
    return true;
}

/// Shape of a closure per the structure trichotomy: complete graphs,
/// complete bipartite graphs and complete split graphs are recognized
/// with an explicit witnessing partition.
struct StructureClass {
    enum class Kind { complete, complete_bipartite, complete_split, other };
    Kind kind = Kind::other;
    std::vector<int> part_a;  // bipartite side / independent part / all vertices
    std::vector<int> part_b;  // bipartite side / clique part

    bool is_complete() const { return kind == Kind::complete; }
    int independent_size() const { return static_cast<int>(part_a.size()); }
    int clique_size() const { return static_cast<int>(part_b.size()); }
};

inline StructureClass classify_structure(const Graph& g) {
    const int n = g.vertex_count();
    StructureClass out;
    if (g.complete()) {
        out.kind = StructureClass::Kind::complete;
        for (int v = 0; v < n; ++v)
            out.part_a.push_back(v);
        return out;
    }

    // complete bipartite: proper 2-coloring with every cross edge present
    if (n >= 2 && is_connected(g) && is_bipartite(g)) {
        std::vector<int> color(n, -1);
        std::vector<int> stack{0};
        color[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.for_each_neighbor(v, [&](int u) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                }
            });
        }
        long long a = 0, b = 0;
        for (int v = 0; v < n; ++v)
            (color[v] == 0 ? a : b)++;
        if (a > 0 && b > 0 && g.edge_count() == a * b) {
            out.kind = StructureClass::Kind::complete_bipartite;
            for (int v = 0; v < n; ++v)
                (color[v] == 0 ? out.part_a : out.part_b).push_back(v);
            if (out.part_a.size() > out.part_b.size())
                std::swap(out.part_a, out.part_b);
            return out;
        }
    }

    // complete split: the clique part is exactly the universal vertices
    std::vector<int> clique, indep;
    for (int v = 0; v < n; ++v)
        (g.degree(v) == n - 1 ? clique : indep).push_back(v);
    if (!clique.empty() && !indep.empty()) {
        bool independent = true;
        for (std::size_t i = 0; i < indep.size() && independent; ++i)
            for (std::size_t j = i + 1; j < indep.size(); ++j)
                if (g.adjacent(indep[i], indep[j])) {
                    independent = false;
                    break;
                }
        if (independent) {
            out.kind = StructureClass::Kind::complete_split;
            out.part_a = std::move(indep);
            out.part_b = std::move(clique);
            return out;
        }
    }
    return out;
}

}  // namespace perclab
