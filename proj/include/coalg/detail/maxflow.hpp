#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace coalg::detail {

/// Edmonds-Karp max flow over an exact weight type (64-bit counts or Rat).
/// The augmentation count is combinatorial (O(V*E)), so termination does not
/// depend on the weight type.
template <typename W>
class MaxFlow {
public:
    explicit MaxFlow(std::size_t nodes) : adj_(nodes) {}

    void add_edge(std::size_t from, std::size_t to, W cap) {
        adj_[from].push_back({to, cap, adj_[to].size()});
        adj_[to].push_back({from, W(0), adj_[from].size() - 1});
    }

    W run(std::size_t s, std::size_t t) {
        W total(0);
        while (true) {
            std::vector<std::pair<std::size_t, std::size_t>> parent(adj_.size(),
                                                                    {SIZE_MAX, SIZE_MAX});
            std::queue<std::size_t> q;
            q.push(s);
            parent[s] = {s, SIZE_MAX};
            while (!q.empty() && parent[t].first == SIZE_MAX) {
                const std::size_t x = q.front();
                q.pop();
                for (std::size_t k = 0; k < adj_[x].size(); ++k) {
                    const Edge& e = adj_[x][k];
                    if (e.cap > W(0) && parent[e.to].first == SIZE_MAX) {
                        parent[e.to] = {x, k};
                        q.push(e.to);
                    }
                }
            }
            if (parent[t].first == SIZE_MAX) break;
            // bottleneck along the path
            W aug = adj_[parent[t].first][parent[t].second].cap;
            for (std::size_t x = t; x != s;) {
                const auto [px, pk] = parent[x];
                const W c = adj_[px][pk].cap;
                if (c < aug) aug = c;
                x = px;
            }
            for (std::size_t x = t; x != s;) {
                const auto [px, pk] = parent[x];
                Edge& e = adj_[px][pk];
                e.cap = e.cap - aug;
                adj_[e.to][e.rev].cap = adj_[e.to][e.rev].cap + aug;
                x = px;
            }
            total = total + aug;
        }
        return total;
    }

    /// Flow pushed along a forward edge, from the residual of its reverse.
    W flow_on(std::size_t from, std::size_t edge_index) const {
        const Edge& e = adj_[from][edge_index];
        return adj_[e.to][e.rev].cap;
    }

    std::size_t degree(std::size_t node) const { return adj_[node].size(); }

private:
    struct Edge {
        std::size_t to;
        W cap;
        std::size_t rev;
    };
    std::vector<std::vector<Edge>> adj_;
};

/// Exact transportation feasibility: is there a nonnegative matrix supported
/// on `compat` whose row sums are `supply` and column sums `demand`?
/// Returns the positive cells of one such matrix, or nullopt.
template <typename W>
std::optional<std::map<std::pair<std::size_t, std::size_t>, W>> transport(
    const std::vector<W>& supply, const std::vector<W>& demand,
    const std::set<std::pair<std::size_t, std::size_t>>& compat) {
    W total_s(0), total_d(0);
    for (const W& w : supply) total_s = total_s + w;
    for (const W& w : demand) total_d = total_d + w;
    if (!(total_s == total_d)) return std::nullopt;

    const std::size_t n = supply.size(), m = demand.size();
    const std::size_t src = n + m, snk = n + m + 1;
    MaxFlow<W> mf(n + m + 2);
    for (std::size_t i = 0; i < n; ++i) mf.add_edge(src, i, supply[i]);
    for (std::size_t j = 0; j < m; ++j) mf.add_edge(n + j, snk, demand[j]);
    // Record where each compat edge lands in the adjacency list so its flow
    // can be read back afterwards.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> where;
    for (const auto& [i, j] : compat) {
        where[{i, j}] = {i, mf.degree(i)};
        mf.add_edge(i, n + j, total_s);
    }
    if (!(mf.run(src, snk) == total_s)) return std::nullopt;

    std::map<std::pair<std::size_t, std::size_t>, W> cells;
    for (const auto& [ij, loc] : where) {
        const W f = mf.flow_on(loc.first, loc.second);
        if (f > W(0)) cells.emplace(ij, f);
    }
    return cells;
}

}  // namespace coalg::detail
