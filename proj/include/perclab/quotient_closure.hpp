#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "perclab/closure.hpp"
#include "perclab/graph.hpp"

namespace perclab {

namespace detail {

// Fixpoint engine over twin classes. Whenever two vertices gain t-1
// common neighbors, the closure makes their neighborhoods equal (minus
// each other), so the engine merges their classes and keeps a quotient
// graph: classes are internally all-adjacent or all-nonadjacent, and
// adjacency between classes is all-or-none. A merge of adjacent classes,
// or of any class that is already a clique of size >= 2, forces the
// merged class into a clique (each such internal edge completes its own
// K_{2,t} copy). The quotient fixpoint expands to exactly the closure;
// this is property-tested against the certificate engine and the generic
// oracle.
class QuotientClosure {
public:
    QuotientClosure(const Graph& g, int t)
        : g_(g),
          t_(t),
          n_(g.vertex_count()),
          words_(g.row_words()),
          rows_(std::size_t(n_) * words_),
          parent_(n_),
          size_(n_, 1),
          clique_(n_, 0),
          alive_count_(n_) {
        for (int v = 0; v < n_; ++v) {
            auto r = g.row(v);
            std::copy(r.begin(), r.end(), rows_.begin() + std::size_t(v) * words_);
        }
        std::iota(parent_.begin(), parent_.end(), 0);
        pending_.assign((std::size_t(n_) * n_ + 63) / 64, 0);
    }

    void run() {
        seed_agenda();
        while (!agenda_.empty() && !done()) {
            auto [a, b] = agenda_.back();
            agenda_.pop_back();
            clear_pending(a, b);
            int x = find(a), y = find(b);
            if (x == y)
                continue;
            if (common_count(x, y) >= t_ - 1)
                merge(x, y);
        }
    }

    bool complete() const {
        if (n_ <= 1)
            return true;
        if (alive_count_ != 1)
            return false;
        for (int v = 0; v < n_; ++v)
            if (parent_[v] == v)
                return clique_[v] && size_[v] == n_;
        return false;
    }

    Graph expand() {
        AdjacencyMatrix adj(n_);
        std::vector<std::vector<int>> members(n_);
        for (int v = 0; v < n_; ++v)
            members[find(v)].push_back(v);
        for (int c = 0; c < n_; ++c) {
            if (parent_[c] != c)
                continue;
            if (clique_[c])
                for (std::size_t i = 0; i < members[c].size(); ++i)
                    for (std::size_t j = i + 1; j < members[c].size(); ++j)
                        adj.add_edge(members[c][i], members[c][j]);
            bits::for_each_bit(row(c), [&](int d) {
                if (d > c)
                    for (int a : members[c])
                        for (int b : members[d])
                            adj.add_edge(a, b);
            });
        }
        return Graph(std::move(adj));
    }

private:
    std::span<const std::uint64_t> row(int c) const {
        return {rows_.data() + std::size_t(c) * words_, std::size_t(words_)};
    }
    std::span<std::uint64_t> row(int c) {
        return {rows_.data() + std::size_t(c) * words_, std::size_t(words_)};
    }

    bool done() const { return n_ > 1 && alive_count_ == 1; }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool class_adjacent(int x, int y) const {
        return (rows_[std::size_t(x) * words_ + (y >> 6)] >> (y & 63)) & 1;
    }

    // Common-neighbor count of any vertex pair (x', y') with x' in class x,
    // y' in class y: sizes of classes adjacent to both, plus the rest of a
    // clique class when the two classes are adjacent.
    long long common_count(int x, int y) {
        long long c = 0;
        auto rx = row(x), ry = row(y);
        for (int i = 0; i < words_; ++i) {
            std::uint64_t w = rx[i] & ry[i];
            while (w) {
                c += size_[i * 64 + std::countr_zero(w)];
                w &= w - 1;
                if (c >= t_ - 1)
                    return c;
            }
        }
        if (class_adjacent(x, y)) {
            if (clique_[x])
                c += size_[x] - 1;
            if (clique_[y])
                c += size_[y] - 1;
        }
        return c;
    }

    void clear_pending(int a, int b) {
        std::size_t k = pair_key(a, b);
        pending_[k >> 6] &= ~(std::uint64_t(1) << (k & 63));
    }

    std::size_t pair_key(int a, int b) const {
        if (a > b)
            std::swap(a, b);
        return std::size_t(a) * n_ + b;
    }

    void enqueue(int a, int b) {
        if (a == b)
            return;
        std::size_t k = pair_key(a, b);
        if ((pending_[k >> 6] >> (k & 63)) & 1)
            return;
        pending_[k >> 6] |= std::uint64_t(1) << (k & 63);
        agenda_.emplace_back(a, b);
    }

    void seed_agenda() {
        if (t_ - 1 <= 0) {
            // t = 1 never occurs (t >= 2 enforced by callers); guard anyway
            for (int u = 0; u < n_; ++u)
                for (int v = u + 1; v < n_; ++v)
                    enqueue(u, v);
            return;
        }
        // Wedge scan: only pairs at distance <= 2 can share a neighbor.
        std::vector<std::uint16_t> cnt(std::size_t(n_) * n_, 0);
        std::vector<int> nbr;
        for (int w = 0; w < n_; ++w) {
            nbr.clear();
            bits::for_each_bit(row(w), [&](int v) { nbr.push_back(v); });
            for (std::size_t i = 0; i < nbr.size(); ++i)
                for (std::size_t j = i + 1; j < nbr.size(); ++j) {
                    std::size_t k = std::size_t(nbr[i]) * n_ + nbr[j];
                    if (++cnt[k] == static_cast<std::uint16_t>(t_ - 1))
                        enqueue(nbr[i], nbr[j]);
                }
        }
    }

    void merge(int x, int y) {
        int w = std::min(x, y);
        int o = std::max(x, y);
        bool adjacent = class_adjacent(x, y);
        bool make_clique = adjacent || (clique_[x] && size_[x] >= 2) || (clique_[y] && size_[y] >= 2);

        auto rw = row(w);
        auto ro = row(o);
        for (int i = 0; i < words_; ++i)
            rw[i] |= ro[i];
        rw[w >> 6] &= ~(std::uint64_t(1) << (w & 63));
        rw[o >> 6] &= ~(std::uint64_t(1) << (o & 63));

        neighbor_scratch_.clear();
        bits::for_each_bit(row(w), [&](int z) { neighbor_scratch_.push_back(z); });
        for (int z : neighbor_scratch_) {
            auto rz = row(z);
            rz[w >> 6] |= std::uint64_t(1) << (w & 63);
            rz[o >> 6] &= ~(std::uint64_t(1) << (o & 63));
        }

        parent_[o] = w;
        size_[w] += size_[o];
        clique_[w] = make_clique;
        --alive_count_;
        if (done())
            return;

        // Pairs whose common count or neighborhoods this merge can change:
        // everything adjacent to the merged class pairwise, and the merged
        // class against anything within distance two.
        for (std::size_t i = 0; i < neighbor_scratch_.size(); ++i)
            for (std::size_t j = i + 1; j < neighbor_scratch_.size(); ++j)
                enqueue(neighbor_scratch_[i], neighbor_scratch_[j]);

        dist2_scratch_.assign(words_, 0);
        for (int i = 0; i < words_; ++i)
            dist2_scratch_[i] = rw[i];
        for (int z : neighbor_scratch_) {
            auto rz = row(z);
            for (int i = 0; i < words_; ++i)
                dist2_scratch_[i] |= rz[i];
        }
        dist2_scratch_[w >> 6] &= ~(std::uint64_t(1) << (w & 63));
        bits::for_each_bit(dist2_scratch_, [&](int p) { enqueue(w, p); });
    }

    const Graph& g_;
    int t_;
    int n_;
    int words_;
    std::vector<std::uint64_t> rows_;
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<char> clique_;
    int alive_count_;
    std::vector<std::pair<int, int>> agenda_;
    std::vector<std::uint64_t> pending_;
    std::vector<int> neighbor_scratch_;
    std::vector<std::uint64_t> dist2_scratch_;
};

}  // namespace detail

/// Same fixpoint as close_k2t, without the certificate trace; built for
/// Monte Carlo scale.
inline Graph close_k2t_fast(const Graph& g, int t) {
    if (t < 2)
        throw std::invalid_argument("close_k2t_fast: t must be at least 2");
    detail::QuotientClosure q(g, t);
    q.run();
    return q.expand();
}

/// Does G percolate, i.e. is its K_{2,t}-bootstrap closure complete?
inline bool percolates(const Graph& g, int t) {
    if (t < 2)
        throw std::invalid_argument("percolates: t must be at least 2");
    if (g.vertex_count() <= 1)
        return true;
    if (g.complete())
        return true;
    if (!is_connected(g))
        return false;  // closure never joins components
    detail::QuotientClosure q(g, t);
    q.run();
    return q.complete();
}

/// Partition of V under x ~ y iff their closure neighborhoods away from
/// each other coincide. The computed partition is re-verified to be an
/// equivalence relation before it is returned.
inline std::vector<std::vector<int>> equivalence_classes(const Graph& g, int t) {
    if (t < 2)
        throw std::invalid_argument("equivalence_classes: t must be at least 2");
    Graph closure = close_k2t_fast(g, t);
    const int n = closure.vertex_count();
    const int words = closure.row_words();

    auto twin = [&](int x, int y) {
        auto rx = closure.row(x);
        auto ry = closure.row(y);
        for (int i = 0; i < words; ++i) {
            std::uint64_t mask = ~std::uint64_t(0);
            if (i == (x >> 6))
                mask &= ~(std::uint64_t(1) << (x & 63));
            if (i == (y >> 6))
                mask &= ~(std::uint64_t(1) << (y & 63));
            if ((rx[i] & mask) != (ry[i] & mask))
                return false;
        }
        return true;
    };

    std::vector<std::vector<int>> classes;
    std::vector<int> cls(n, -1);
    for (int v = 0; v < n; ++v) {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (twin(classes[c][0], v)) {
                cls[v] = static_cast<int>(c);
                classes[c].push_back(v);
                break;
            }
        if (cls[v] < 0) {
            cls[v] = static_cast<int>(classes.size());
            classes.push_back({v});
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if ((cls[x] == cls[y]) != twin(x, y))
                throw std::logic_error("equivalence_classes: relation is not an equivalence");
    return classes;
}

}  // namespace perclab
