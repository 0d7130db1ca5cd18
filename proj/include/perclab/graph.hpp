#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace perclab {

namespace bits {

inline int popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

// Counts |a & b| but stops as soon as the count reaches `need`.
inline int popcount_and_at_least(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b, int need) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        c += std::popcount(a[i] & b[i]);
        if (c >= need)
            return c;
    }
    return c;
}

template <typename Fn>
inline void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::uint64_t w = words[i];
        while (w) {
            int b = std::countr_zero(w);
            fn(static_cast<int>(i * 64 + b));
            w &= w - 1;
        }
    }
}

}  // namespace bits

/// Subset of the vertices 0..n-1 of a host graph, stored as a bitset.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs)
            s.insert(v);
        return s;
    }
    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            s.insert(v);
        return s;
    }

    int universe_size() const { return n_; }
    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void insert(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
    void erase(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        bits::for_each_bit(words(), std::forward<Fn>(fn));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " out of range");
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

class Graph;

/// Mutable word-packed adjacency matrix; the working state of the closure
/// engines. Freeze into an immutable Graph when done.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(int n)
        : n_(n), words_((n + 63) / 64), rows_(std::size_t(n) * words_, 0), deg_(n, 0), m_(0) {}

    AdjacencyMatrix(const Graph& g);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    int row_words() const { return words_; }
    int degree(int v) const { return deg_[v]; }

    bool adjacent(int u, int v) const {
        return (rows_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }

    // Returns false if the edge was already present.
    bool add_edge(int u, int v) {
        if (u == v)
            throw std::invalid_argument("add_edge: loop edge");
        if (adjacent(u, v))
            return false;
        set_bit(u, v);
        set_bit(v, u);
        ++deg_[u];
        ++deg_[v];
        ++m_;
        return true;
    }

    std::span<const std::uint64_t> row(int v) const {
        return {rows_.data() + std::size_t(v) * words_, std::size_t(words_)};
    }

    bool complete() const { return m_ == static_cast<long long>(n_) * (n_ - 1) / 2; }

private:
    friend class Graph;

    void set_bit(int u, int v) {
        rows_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> rows_;
    std::vector<int> deg_;
    long long m_;
};

/// Immutable simple undirected graph on dense vertex ids 0..n-1.
/// Adjacency is word-packed per row so that common-neighborhood
/// intersection costs O(n/64) words, the hot operation everywhere here.
/// Values are safe to share across threads once constructed.
class Graph {
public:
    Graph() : n_(0), words_(0), m_(0) {}

    explicit Graph(AdjacencyMatrix&& a)
        : n_(a.n_), words_(a.words_), m_(a.m_), rows_(std::move(a.rows_)), deg_(std::move(a.deg_)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0)
            throw std::invalid_argument("from_edges: negative vertex count");
        AdjacencyMatrix a(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::out_of_range("from_edges: endpoint out of range");
            if (u == v)
                throw std::invalid_argument("from_edges: loop edge");
            a.add_edge(u, v);  // duplicates collapse silently
        }
        return Graph(std::move(a));
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    int row_words() const { return words_; }
    int degree(int v) const { return deg_[v]; }

    bool adjacent(int u, int v) const {
        return (rows_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }

    std::span<const std::uint64_t> row(int v) const {
        return {rows_.data() + std::size_t(v) * words_, std::size_t(words_)};
    }

    template <typename Fn>
    void for_each_neighbor(int v, Fn&& fn) const {
        bits::for_each_bit(row(v), std::forward<Fn>(fn));
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(deg_[v]);
        for_each_neighbor(v, [&](int u) { out.push_back(u); });
        return out;
    }

    bool complete() const { return m_ == static_cast<long long>(n_) * (n_ - 1) / 2; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v)
                    out.emplace_back(u, v);
            });
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    /// True when every edge of this graph is an edge of `o` (same vertex set).
    bool subgraph_of(const Graph& o) const {
        if (n_ != o.n_)
            return false;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] & ~o.rows_[i])
                return false;
        return true;
    }

private:
    int n_;
    int words_;
    long long m_;
    std::vector<std::uint64_t> rows_;
    std::vector<int> deg_;
};

inline AdjacencyMatrix::AdjacencyMatrix(const Graph& g)
    : n_(g.vertex_count()), words_(g.row_words()), rows_(), deg_(), m_(g.edge_count()) {
    rows_.assign(std::size_t(n_) * words_, 0);
    for (int v = 0; v < n_; ++v) {
        auto r = g.row(v);
        std::copy(r.begin(), r.end(), rows_.begin() + std::size_t(v) * words_);
    }
    deg_.resize(n_);
    for (int v = 0; v < n_; ++v)
        deg_[v] = g.degree(v);
}

inline int common_neighbor_count(const Graph& g, int x, int y) {
    if (x == y)
        throw std::invalid_argument("common_neighbor_count: vertices must differ");
    return bits::popcount_and(g.row(x), g.row(y));
}

inline VertexSet common_neighborhood(const Graph& g, std::span<const int> vs) {
    VertexSet out = VertexSet::full(g.vertex_count());
    for (int v : vs) {
        auto r = g.row(v);
        auto w = out.words();
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] &= r[i];
    }
    return out;
}

/// Induced subgraph on S, relabeled to 0..|S|-1 in ascending order of the
/// original ids.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.to_vector();
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        index[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        g.for_each_neighbor(verts[i], [&](int u) {
            if (index[u] >= 0 && u > verts[i])
                edges.emplace_back(static_cast<int>(i), index[u]);
        });
    return Graph::from_edges(static_cast<int>(verts.size()), edges);
}

inline long long count_induced_edges(const Graph& g, const VertexSet& s) {
    long long e = 0;
    std::vector<int> verts = s.to_vector();
    for (int v : verts)
        e += bits::popcount_and(g.row(v), s.words());
    return e / 2;
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1)
        return true;
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](int u) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        });
    }
    return reached == n;
}

inline bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool ok = true;
            g.for_each_neighbor(v, [&](int u) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    ok = false;
                }
            });
            if (!ok)
                return false;
        }
    }
    return true;
}

}  // namespace perclab
