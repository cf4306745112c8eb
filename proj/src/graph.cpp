#include "specgap/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace specgap {

Graph::Graph(int n) {
    if (n < 0) throw InvalidGraph("vertex count must be nonnegative");
    if (n > kMaxVertices)
        throw InvalidGraph("vertex count " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kMaxVertices));
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
    degrees_.assign(n_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InvalidGraph("edge endpoint out of range");
    if (u == v) throw InvalidGraph("self-loops are not allowed");
    if (has_edge(u, v)) return;
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    ++degrees_[u];
    ++degrees_[v];
    ++m_;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.for_neighbors(u, [&](int v) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    m.degrees = g.degrees();
    for (int d : m.degrees) m.volume += d;
    m.max_degree = m.degrees.empty() ? 0 : *std::max_element(m.degrees.begin(), m.degrees.end());
    m.connected = true;
    int diam = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d < 0) {
                m.connected = false;
            } else {
                diam = std::max(diam, d);
            }
        }
        if (!m.connected) break;
    }
    if (m.connected) m.diameter = diam;
    return m;
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> out;
    int timer = 0;

    // Iterative DFS; recursion would overflow on long paths.
    struct Frame {
        int u;
        std::vector<int> nbrs;
        size_t next = 0;
    };
    std::vector<Frame> stack;
    auto neighbor_list = [&](int u) {
        std::vector<int> nb;
        g.for_neighbors(u, [&](int v) { nb.push_back(v); });
        return nb;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, neighbor_list(root)});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < f.nbrs.size()) {
                int v = f.nbrs[f.next++];
                if (disc[v] < 0) {
                    parent[v] = f.u;
                    disc[v] = low[v] = timer++;
                    stack.push_back({v, neighbor_list(v)});
                } else if (v != parent[f.u]) {
                    low[f.u] = std::min(low[f.u], disc[v]);
                }
            } else {
                int u = f.u;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().u;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p]) out.emplace_back(std::min(p, u), std::max(p, u));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    return out;
}

int cut_edges_between(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) throw InvalidGraph("subset vertex out of range");
        in_s[v] = 1;
    }
    int count = 0;
    for (auto [u, v] : g.edges())
        if (in_s[u] != in_s[v]) ++count;
    return count;
}

}  // namespace specgap
