#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "perclab/graph.hpp"

namespace perclab {

namespace detail {

// Backtracking embedding of a small pattern into a host graph with one
// host edge pinned. Subgraph semantics: pattern edges must map onto host
// edges, pattern non-edges are unconstrained.
class PinnedEmbedding {
public:
    PinnedEmbedding(const Graph& host, const Graph& pattern, int eu, int ev)
        : host_(host), pattern_(pattern), eu_(eu), ev_(ev) {}

    bool exists() {
        int hn = pattern_.vertex_count();
        if (host_.vertex_count() < hn)
            return false;
        for (auto [pa, pb] : pattern_.edges()) {
            if (try_pinned(pa, pb) || try_pinned(pb, pa))
                return true;
        }
        return false;
    }

private:
    bool host_adjacent(int a, int b) const {
        if (host_.adjacent(a, b))
            return true;
        return (a == eu_ && b == ev_) || (a == ev_ && b == eu_);
    }

    int host_degree(int v) const { return host_.degree(v) + (v == eu_ || v == ev_ ? 1 : 0); }

    bool try_pinned(int pa, int pb) {
        int hn = pattern_.vertex_count();
        if (host_degree(eu_) < pattern_.degree(pa) || host_degree(ev_) < pattern_.degree(pb))
            return false;
        order_.clear();
        order_.push_back(pa);
        order_.push_back(pb);
        // Assign remaining pattern vertices in BFS order from the pinned
        // edge so every new vertex is constrained by a mapped neighbor.
        std::vector<char> queued(hn, 0);
        queued[pa] = queued[pb] = 1;
        for (std::size_t head = 0; head < order_.size(); ++head) {
            pattern_.for_each_neighbor(order_[head], [&](int x) {
                if (!queued[x]) {
                    queued[x] = 1;
                    order_.push_back(x);
                }
            });
        }
        for (int x = 0; x < hn; ++x)  // isolated pattern vertices, if any
            if (!queued[x])
                order_.push_back(x);

        map_.assign(hn, -1);
        used_.assign(host_.vertex_count(), 0);
        map_[pa] = eu_;
        map_[pb] = ev_;
        used_[eu_] = 1;
        used_[ev_] = 1;
        bool ok = extend(2);
        return ok;
    }

    bool extend(std::size_t pos) {
        if (pos == order_.size())
            return true;
        int x = order_[pos];
        int need = pattern_.degree(x);
        for (int c = 0; c < host_.vertex_count(); ++c) {
            if (used_[c] || host_degree(c) < need)
                continue;
            bool ok = true;
            pattern_.for_each_neighbor(x, [&](int y) {
                if (map_[y] >= 0 && !host_adjacent(map_[y], c))
                    ok = false;
            });
            if (!ok)
                continue;
            map_[x] = c;
            used_[c] = 1;
            if (extend(pos + 1))
                return true;
            map_[x] = -1;
            used_[c] = 0;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    int eu_, ev_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<char> used_;
};

}  // namespace detail

/// Does host + (eu,ev) contain a subgraph copy of `pattern` that uses the
/// edge (eu,ev)? The edge is treated as present during the search.
inline bool has_copy_through_edge(const Graph& host, const Graph& pattern, int eu, int ev) {
    detail::PinnedEmbedding search(host, pattern, eu, ev);
    return search.exists();
}

/// Generic H-bootstrap closure by round iteration: in each round every
/// non-edge whose insertion creates a copy of `h` through it (checked by
/// subgraph-isomorphism search against the round's snapshot) is added.
/// Serves as the correctness oracle for the specialized engines.
inline Graph close_generic(const Graph& g, const Graph& h) {
    if (h.edge_count() == 0)
        throw std::invalid_argument("close_generic: pattern graph has no edges");
    if (h.vertex_count() > 12)
        throw std::invalid_argument("close_generic: oracle limited to patterns on <= 12 vertices");

    Graph cur = g;
    for (;;) {
        std::vector<std::pair<int, int>> adds;
        for (int u = 0; u < cur.vertex_count(); ++u)
            for (int v = u + 1; v < cur.vertex_count(); ++v)
                if (!cur.adjacent(u, v) && has_copy_through_edge(cur, h, u, v))
                    adds.emplace_back(u, v);
        if (adds.empty())
            return cur;
        AdjacencyMatrix a(cur);
        for (auto [u, v] : adds)
            a.add_edge(u, v);
        cur = Graph(std::move(a));
    }
}

}  // namespace perclab
