#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "perclab/closure.hpp"
#include "perclab/graph.hpp"

namespace perclab {

/// One K_{2,t-1} copy: the 2-side pair and the (t-1)-side.
struct K2Copy {
    std::array<int, 2> side2{-1, -1};
    std::vector<int> side_t;
};

/// A maximal vertex-disjoint family of K_{2,t-1} copies together with the
/// graph obtained by merging the neighborhoods of every 2-side pair.
struct FamilyWitness {
    std::vector<K2Copy> families;
    Graph gprime;
};

namespace detail {

// Lexicographically first K_{2,q} copy among the vertices marked
// available: first pair (a < b) with at least q available common
// neighbors, taking the q smallest of them.
inline std::optional<K2Copy> first_k2q_copy(const Graph& g, int q, const std::vector<char>& avail) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        if (!avail[a] || g.degree(a) < q)
            continue;
        for (int b = a + 1; b < n; ++b) {
            if (!avail[b] || g.degree(b) < q)
                continue;
            K2Copy copy;
            auto ra = g.row(a);
            auto rb = g.row(b);
            for (int i = 0; i < g.row_words() && static_cast<int>(copy.side_t.size()) < q; ++i) {
                std::uint64_t w = ra[i] & rb[i];
                while (w && static_cast<int>(copy.side_t.size()) < q) {
                    int c = i * 64 + std::countr_zero(w);
                    w &= w - 1;
                    if (avail[c])
                        copy.side_t.push_back(c);
                }
            }
            if (static_cast<int>(copy.side_t.size()) == q) {
                copy.side2 = {a, b};
                return copy;
            }
            copy.side_t.clear();
        }
    }
    return std::nullopt;
}

// Joins a to N_G(b) \ N_G(a) and b to N_G(a) \ N_G(b), neighborhoods
// taken in the original graph.
inline void merge_pair_neighborhoods(const Graph& g, AdjacencyMatrix& adj, int a, int b) {
    g.for_each_neighbor(b, [&](int x) {
        if (x != a && !g.adjacent(a, x))
            adj.add_edge(a, x);
    });
    g.for_each_neighbor(a, [&](int x) {
        if (x != b && !g.adjacent(b, x))
            adj.add_edge(b, x);
    });
}

inline long long induced_edges_of(const Graph& g, const std::vector<int>& verts) {
    long long e = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j]))
                ++e;
    return e;
}

}  // namespace detail

/// Greedy maximal vertex-disjoint K_{2,t-1} family in deterministic
/// lexicographic order, plus the auxiliary graph G' that merges the
/// neighborhoods of each copy's 2-side pair.
inline FamilyWitness lower_witness(const Graph& g, int t) {
    if (t < 4)
        throw std::invalid_argument("lower_witness: t must be at least 4");
    FamilyWitness out;
    std::vector<char> avail(g.vertex_count(), 1);
    for (;;) {
        auto copy = detail::first_k2q_copy(g, t - 1, avail);
        if (!copy)
            break;
        avail[copy->side2[0]] = 0;
        avail[copy->side2[1]] = 0;
        for (int c : copy->side_t)
            avail[c] = 0;
        out.families.push_back(std::move(*copy));
    }
    AdjacencyMatrix adj(g);
    for (const auto& f : out.families)
        detail::merge_pair_neighborhoods(g, adj, f.side2[0], f.side2[1]);
    out.gprime = Graph(std::move(adj));
    return out;
}

/// Structured report of a failed structural fact during the t=4
/// component procedure. `subgraph` is a vertex set whose induced density
/// is at least 13/10, the certificate that the sparsity hypothesis fails.
struct FactViolation {
    enum class Which { fact1, fact2, fact3, growth_bound };
    Which which = Which::fact1;
    int component = -1;
    int other_component = -1;
    std::string detail;
    std::vector<int> subgraph;

    static std::string name(Which w) {
        switch (w) {
            case Which::fact1:
                return "fact1";
            case Which::fact2:
                return "fact2";
            case Which::fact3:
                return "fact3";
            case Which::growth_bound:
                return "growth_bound";
        }
        return "?";
    }
};

/// One component grown by the t=4 procedure: seed K_{2,3} plus the two
/// growth rules, with the recorded pair list, the B-set and both step
/// counters. |V| = 2l + 3l' + 5 always; |E| = 3l + 4l' + 6 unless a fact
/// violation fired.
struct FComponent {
    std::vector<int> vertices;
    std::vector<std::array<int, 2>> apairs;
    std::vector<int> bset;
    int ell = 0;
    int ell_prime = 0;
    // growth opportunities, counted after the component stopped growing,
    // where only the looser reading of the subprocedure (different pairs
    // serving u and v) would still apply
    int loose_only_steps = 0;
};

struct FProcedureResult {
    std::vector<FComponent> components;
    std::vector<FactViolation> violations;

    bool clean() const { return violations.empty(); }
};

/// The constructive component procedure for t = 4. Components are seeded
/// with a K_{2,3} and grown by two rules: an adjacent available pair
/// (u,v) with u seeing some recorded pair and v seeing the B-set extends
/// the component and records the new pair {u, w}; otherwise available
/// triples u,v,w with w a common neighbor and one recorded pair
/// intersecting both N(u) and N(v) are absorbed. Every step re-checks
/// the exact edge count 3l + 4l' + 6 and the bound 4l + l' <= 4; a
/// failure is reported as a FactViolation whose subgraph has density
/// >= 13/10, and the procedure stops.
inline FProcedureResult f_procedure_t4(const Graph& g) {
    FProcedureResult out;
    const int n = g.vertex_count();
    std::vector<char> avail(n, 1);

    auto in_component = [](const FComponent& f, int v) {
        for (int x : f.vertices)
            if (x == v)
                return true;
        return false;
    };

    // returns false (and records a violation) when a fact fails
    auto check_counts = [&](const FComponent& f, const char* stage) -> bool {
        long long want_v = 2LL * f.ell + 3LL * f.ell_prime + 5;
        long long have_e = detail::induced_edges_of(g, f.vertices);
        long long want_e = 3LL * f.ell + 4LL * f.ell_prime + 6;
        if (static_cast<long long>(f.vertices.size()) != want_v)
            throw std::logic_error("f_procedure_t4: vertex count bookkeeping broke");
        if (have_e != want_e) {
            FactViolation fv;
            fv.which = FactViolation::Which::fact1;
            fv.component = static_cast<int>(out.components.size());
            fv.detail = std::string(stage) + ": induced edges " + std::to_string(have_e) +
                        " != " + std::to_string(want_e);
            fv.subgraph = f.vertices;
            out.violations.push_back(std::move(fv));
            return false;
        }
        if (4 * f.ell + f.ell_prime >= 5) {
            FactViolation fv;
            fv.which = FactViolation::Which::growth_bound;
            fv.component = static_cast<int>(out.components.size());
            fv.detail = "4l + l' = " + std::to_string(4 * f.ell + f.ell_prime);
            fv.subgraph = f.vertices;
            out.violations.push_back(std::move(fv));
            return false;
        }
        return true;
    };

    for (;;) {
        auto seed = detail::first_k2q_copy(g, 3, avail);
        if (!seed)
            break;
        FComponent f;
        f.vertices = {seed->side2[0], seed->side2[1]};
        f.vertices.insert(f.vertices.end(), seed->side_t.begin(), seed->side_t.end());
        f.apairs.push_back({seed->side2[0], seed->side2[1]});
        f.bset = seed->side_t;

        auto sees_pair = [&](int x, const std::array<int, 2>& p) {
            return g.adjacent(x, p[0]) || g.adjacent(x, p[1]);
        };
        auto sees_some_pair = [&](int x) {
            for (const auto& p : f.apairs)
                if (sees_pair(x, p))
                    return true;
            return false;
        };
        auto sees_bset = [&](int x) {
            for (int b : f.bset)
                if (g.adjacent(x, b))
                    return true;
            return false;
        };
        auto common_external = [&](int u, int v) {
            int w = -1;
            g.for_each_neighbor(u, [&](int x) {
                if (w < 0 && x != v && avail[x] && !in_component(f, x) && g.adjacent(v, x))
                    w = x;
            });
            return w;
        };

        bool aborted = !check_counts(f, "seed");
        while (!aborted) {
            bool grew = false;

            // adjacent-pair rule
            for (int u = 0; u < n && !grew && !aborted; ++u) {
                if (!avail[u] || in_component(f, u) || !sees_some_pair(u))
                    continue;
                int v = -1;
                g.for_each_neighbor(u, [&](int x) {
                    if (v < 0 && avail[x] && !in_component(f, x) && sees_bset(x))
                        v = x;
                });
                if (v < 0)
                    continue;
                int w = -1;
                for (int b : f.bset)
                    if (g.adjacent(v, b)) {
                        w = b;
                        break;
                    }
                f.vertices.push_back(u);
                f.vertices.push_back(v);
                f.apairs.push_back({u, w});
                f.bset.erase(std::find(f.bset.begin(), f.bset.end(), w));
                f.bset.push_back(v);
                ++f.ell;
                if (!check_counts(f, "pair rule"))
                    aborted = true;
                grew = true;
            }
            if (aborted || grew)
                continue;

            // common-neighbor subprocedure (literal reading: one recorded
            // pair must serve both u and v)
            for (int u = 0; u < n && !grew && !aborted; ++u) {
                if (!avail[u] || in_component(f, u))
                    continue;
                for (int v = u + 1; v < n && !grew; ++v) {
                    if (!avail[v] || in_component(f, v))
                        continue;
                    bool same_pair = false;
                    for (const auto& p : f.apairs)
                        if (sees_pair(u, p) && sees_pair(v, p)) {
                            same_pair = true;
                            break;
                        }
                    if (!same_pair)
                        continue;
                    int w = common_external(u, v);
                    if (w < 0)
                        continue;
                    f.vertices.push_back(u);
                    f.vertices.push_back(v);
                    f.vertices.push_back(w);
                    f.apairs.push_back({u, v});
                    f.bset.push_back(w);
                    ++f.ell_prime;
                    if (!check_counts(f, "subprocedure"))
                        aborted = true;
                    grew = true;
                }
            }
            if (!grew && !aborted)
                break;
        }

        if (!aborted) {
            // where would only the looser reading (two different recorded
            // pairs serving u and v) still grow the component?
            for (int u = 0; u < n; ++u) {
                if (!avail[u] || in_component(f, u) || !sees_some_pair(u))
                    continue;
                for (int v = u + 1; v < n; ++v) {
                    if (!avail[v] || in_component(f, v) || !sees_some_pair(v))
                        continue;
                    bool same_pair = false;
                    for (const auto& p : f.apairs)
                        if (sees_pair(u, p) && sees_pair(v, p)) {
                            same_pair = true;
                            break;
                        }
                    if (!same_pair && common_external(u, v) >= 0)
                        ++f.loose_only_steps;
                }
            }
        }

        for (int v : f.vertices)
            avail[v] = 0;
        out.components.push_back(std::move(f));
        if (aborted)
            return out;
    }

    // cross-component facts
    for (std::size_t i = 0; i < out.components.size(); ++i)
        for (std::size_t j = i + 1; j < out.components.size(); ++j) {
            const auto& fi = out.components[i];
            const auto& fj = out.components[j];
            for (int a : fi.vertices)
                for (int b : fj.vertices)
                    if (g.adjacent(a, b)) {
                        FactViolation fv;
                        fv.which = FactViolation::Which::fact2;
                        fv.component = static_cast<int>(i);
                        fv.other_component = static_cast<int>(j);
                        fv.detail = "edge " + std::to_string(a) + "-" + std::to_string(b) +
                                    " between components";
                        fv.subgraph = fi.vertices;
                        fv.subgraph.insert(fv.subgraph.end(), fj.vertices.begin(),
                                           fj.vertices.end());
                        out.violations.push_back(std::move(fv));
                    }
            std::vector<int> bridges;
            for (int x = 0; x < n; ++x) {
                if (!avail[x])
                    continue;
                bool hits_i = false, hits_j = false;
                g.for_each_neighbor(x, [&](int y) {
                    if (in_component(fi, y))
                        hits_i = true;
                    if (in_component(fj, y))
                        hits_j = true;
                });
                if (hits_i && hits_j)
                    bridges.push_back(x);
            }
            if (bridges.size() >= 2) {
                FactViolation fv;
                fv.which = FactViolation::Which::fact3;
                fv.component = static_cast<int>(i);
                fv.other_component = static_cast<int>(j);
                fv.detail = std::to_string(bridges.size()) + " external vertices bridge the pair";
                fv.subgraph = fi.vertices;
                fv.subgraph.insert(fv.subgraph.end(), fj.vertices.begin(), fj.vertices.end());
                fv.subgraph.push_back(bridges[0]);
                fv.subgraph.push_back(bridges[1]);
                out.violations.push_back(std::move(fv));
            }
        }
    return out;
}

/// The auxiliary graph G' for the t=4 procedure: every recorded pair's
/// neighborhoods (in the original graph) are merged.
inline Graph gprime_t4(const Graph& g, const std::vector<FComponent>& comps) {
    AdjacencyMatrix adj(g);
    for (const auto& f : comps)
        for (const auto& p : f.apairs)
            detail::merge_pair_neighborhoods(g, adj, p[0], p[1]);
    return Graph(std::move(adj));
}

/// True iff G' equals the closure of G and is not complete, i.e. G' is a
/// valid non-percolation certificate.
inline bool verify_witness(const Graph& g, int t, const Graph& gprime) {
    if (gprime.vertex_count() != g.vertex_count() || !g.subgraph_of(gprime))
        throw std::invalid_argument("verify_witness: gprime must contain G on the same vertices");
    if (gprime.complete())
        return false;
    Graph closure = close_k2t(g, t).closure;
    return closure == gprime;
}

}  // namespace perclab
