#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "perclab/graph.hpp"

namespace perclab {

/// Role of a vertex inside a gadget graph. Hubs are the glue vertices
/// (u, v, w), spokes are the 2-side partners (u_i, v_j, w_k), middles are
/// the degree-2 vertices of one K_{2,r} copy.
struct Role {
    enum class Kind { hub, spoke, middle };
    Kind kind = Kind::middle;
    char block = 'u';  // 'u', 'v' or 'w'
    int copy = 0;      // 1-based copy index (spokes and middles)
    int slot = 0;      // 1-based middle slot within its copy

    std::string name() const {
        std::string b(1, block);
        switch (kind) {
            case Kind::hub:
                return b;
            case Kind::spoke:
                return b + std::to_string(copy);
            case Kind::middle:
                return b + std::to_string(copy) + "m" + std::to_string(slot);
        }
        return b;
    }
};

struct LabeledGadget {
    Graph graph;
    std::vector<Role> roles;

    int hub(char block) const {
        for (std::size_t v = 0; v < roles.size(); ++v)
            if (roles[v].kind == Role::Kind::hub && roles[v].block == block)
                return static_cast<int>(v);
        throw std::logic_error("gadget: no hub for block");
    }

    std::vector<int> spokes(char block) const {
        std::vector<int> out;
        for (std::size_t v = 0; v < roles.size(); ++v)
            if (roles[v].kind == Role::Kind::spoke && roles[v].block == block)
                out.push_back(static_cast<int>(v));
        return out;
    }

    std::vector<int> middles(char block) const {
        std::vector<int> out;
        for (std::size_t v = 0; v < roles.size(); ++v)
            if (roles[v].kind == Role::Kind::middle && roles[v].block == block)
                out.push_back(static_cast<int>(v));
        return out;
    }
};

namespace detail {

// Appends one fan block (s copies of K_{2,r} glued at a hub) to an edge
// list under construction. Numbering inside the block: hub first, then
// per copy its spoke followed by the copy's middles.
struct FanBlock {
    int hub;
    std::vector<int> spokes;
};

inline FanBlock append_fan(int r, int s, char block, int offset,
                           std::vector<std::pair<int, int>>& edges, std::vector<Role>& roles) {
    FanBlock out;
    out.hub = offset;
    roles.push_back({Role::Kind::hub, block, 0, 0});
    int next = offset + 1;
    for (int i = 1; i <= s; ++i) {
        int spoke = next++;
        out.spokes.push_back(spoke);
        roles.push_back({Role::Kind::spoke, block, i, 0});
        for (int k = 1; k <= r; ++k) {
            int mid = next++;
            roles.push_back({Role::Kind::middle, block, i, k});
            edges.emplace_back(out.hub, mid);
            edges.emplace_back(spoke, mid);
        }
    }
    return out;
}

}  // namespace detail

/// The fan gadget: s copies of K_{2,r} whose second 2-side vertices are
/// identified into a single hub u. r = 0 degenerates each copy to the
/// nonadjacent pair {u, u_i}.
inline LabeledGadget build_fan(int r, int s) {
    if (r < 0 || s < 1)
        throw std::invalid_argument("build_fan: need r >= 0 and s >= 1");
    std::vector<std::pair<int, int>> edges;
    std::vector<Role> roles;
    detail::append_fan(r, s, 'u', 0, edges, roles);
    int n = 1 + s + s * r;
    return {Graph::from_edges(n, edges), std::move(roles)};
}

/// The three-block gadget: fans with parameters (t-1, r), (s-1, s) and
/// (r-1, t-2) where r = floor((t-1)/2) and s = t-1-r, with the u hub
/// joined to v and all v-spokes, and the v hub joined to w and all
/// w-spokes.
inline LabeledGadget build_ht(int t) {
    if (t < 4)
        throw std::invalid_argument("build_ht: t must be at least 4");
    int r = (t - 1) / 2;
    int s = t - 1 - r;

    std::vector<std::pair<int, int>> edges;
    std::vector<Role> roles;
    auto ub = detail::append_fan(t - 1, r, 'u', 0, edges, roles);
    int voff = static_cast<int>(roles.size());
    auto vb = detail::append_fan(s - 1, s, 'v', voff, edges, roles);
    int woff = static_cast<int>(roles.size());
    auto wb = detail::append_fan(r - 1, t - 2, 'w', woff, edges, roles);

    edges.emplace_back(ub.hub, vb.hub);
    for (int spoke : vb.spokes)
        edges.emplace_back(ub.hub, spoke);
    edges.emplace_back(vb.hub, wb.hub);
    for (int spoke : wb.spokes)
        edges.emplace_back(vb.hub, spoke);

    return {Graph::from_edges(static_cast<int>(roles.size()), edges), std::move(roles)};
}

inline Graph build_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("build_complete_bipartite: negative part size");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

inline Graph build_complete_split(int i, int c) {
    if (i < 0 || c < 0)
        throw std::invalid_argument("build_complete_split: negative part size");
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < i; ++x)
        for (int y = 0; y < c; ++y)
            edges.emplace_back(x, i + y);
    for (int x = 0; x < c; ++x)
        for (int y = x + 1; y < c; ++y)
            edges.emplace_back(i + x, i + y);
    return Graph::from_edges(i + c, edges);
}

/// The weak-bound gadget: a fan of t-2 copies of K_{2,t-1}.
inline LabeledGadget build_remark_gadget(int t) {
    if (t < 4)
        throw std::invalid_argument("build_remark_gadget: t must be at least 4");
    return build_fan(t - 1, t - 2);
}

}  // namespace perclab
