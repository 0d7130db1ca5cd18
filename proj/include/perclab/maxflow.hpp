#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace perclab {

/// Dinic max-flow over 64-bit integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

    void add_edge(int from, int to, long long cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            while (long long f = dfs(s, t, std::numeric_limits<long long>::max()))
                flow += f;
        }
        return flow;
    }

    /// After run(): vertices reachable from s in the residual network,
    /// i.e. the source side of a minimum cut.
    std::vector<char> source_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = head_[v]; e >= 0; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
                    seen[arcs_[e].to] = 1;
                    stack.push_back(arcs_[e].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        long long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e >= 0; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
                    level_[arcs_[e].to] = level_[v] + 1;
                    q.push(arcs_[e].to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int v, int t, long long limit) {
        if (v == t)
            return limit;
        for (int& e = iter_[v]; e >= 0; e = arcs_[e].next) {
            Arc& a = arcs_[e];
            if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
                long long d = dfs(a.to, t, std::min(limit, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs_[e ^ 1].cap += d;
                    return d;
                }
            }
        }
        level_[v] = -1;
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace perclab
