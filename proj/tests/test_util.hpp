#ifndef SPECGAP_TEST_UTIL_HPP
#define SPECGAP_TEST_UTIL_HPP

#include <algorithm>
#include <queue>
#include <random>
#include <vector>

#include "specgap/graph.hpp"

// Independent oracles for the structural metrics. These deliberately work
// from the edge list alone so they share nothing with the Graph bitset
// internals they are checking.
namespace test_oracle {

inline std::vector<std::vector<int>> adjacency_lists(const specgap::Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline std::vector<int> bfs_from(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

// Diameter by all-pairs BFS; -1 marks a disconnected graph.
inline int diameter_oracle(const specgap::Graph& g) {
    auto adj = adjacency_lists(g);
    int diam = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto dist = bfs_from(adj, s);
        for (int d : dist) {
            if (d < 0) return -1;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

inline bool connected_oracle(const specgap::Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_from(adjacency_lists(g), 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// Bridges by deletion: rebuild the graph without each edge and test
// connectivity of the touched component.
inline std::vector<std::pair<int, int>> bridges_oracle(const specgap::Graph& g) {
    auto all = g.edges();
    std::vector<std::pair<int, int>> result;
    int base_components = 0;
    {
        auto adj = adjacency_lists(g);
        std::vector<char> seen(g.vertex_count(), 0);
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (seen[s]) continue;
            ++base_components;
            auto dist = bfs_from(adj, s);
            for (size_t i = 0; i < dist.size(); ++i)
                if (dist[i] >= 0) seen[i] = 1;
        }
    }
    for (auto removed : all) {
        std::vector<std::pair<int, int>> rest;
        for (auto e : all)
            if (e != removed) rest.push_back(e);
        auto h = specgap::Graph::from_edge_list(g.vertex_count(), rest);
        auto adj = adjacency_lists(h);
        std::vector<char> seen(h.vertex_count(), 0);
        int components = 0;
        for (int s = 0; s < h.vertex_count(); ++s) {
            if (seen[s]) continue;
            ++components;
            auto dist = bfs_from(adj, s);
            for (size_t i = 0; i < dist.size(); ++i)
                if (dist[i] >= 0) seen[i] = 1;
        }
        if (components > base_components) result.push_back(removed);
    }
    return result;
}

// Deterministic random test graph, connected by construction: a random
// spanning tree plus extra random edges.
inline specgap::Graph random_connected_graph(int n, double extra_edge_prob,
                                             std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng) < extra_edge_prob) edges.emplace_back(i, j);
    return specgap::Graph::from_edge_list(n, edges);
}

inline specgap::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng) < p) edges.emplace_back(i, j);
    return specgap::Graph::from_edge_list(n, edges);
}

}  // namespace test_oracle

#endif
