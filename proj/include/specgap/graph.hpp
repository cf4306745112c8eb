#ifndef SPECGAP_GRAPH_HPP
#define SPECGAP_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specgap/errors.hpp"

namespace specgap {

// Largest supported vertex count. Everything here is desk scale.
inline constexpr int kMaxVertices = 10000;

// Simple undirected graph on vertices 0..n-1. Adjacency is kept as bitset
// rows plus a degree cache so that enumeration loops stay cheap. Treat
// instances as immutable once built; add_edge exists for generators.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n);

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int u) const { return degrees_[u]; }
    const std::vector<int>& degrees() const { return degrees_; }

    // Adds edge {u,v}; duplicate edges are collapsed silently.
    void add_edge(int u, int v);

    // Edges in colex order: (i,j) with i<j sorted by (j,i).
    std::vector<std::pair<int, int>> edges() const;

    template <class F>
    void for_neighbors(int u, F&& f) const {
        const uint64_t* row = &bits_[static_cast<size_t>(u) * words_];
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;  // 64-bit words per adjacency row
    std::vector<uint64_t> bits_;
    std::vector<int> degrees_;
};

// Structural metrics used by the eigenvalue bounds. diameter is empty for
// disconnected graphs (the explicit infinity marker).
struct GraphMetrics {
    std::vector<int> degrees;
    long long volume = 0;
    int max_degree = 0;
    std::optional<int> diameter;
    bool connected = false;
};

// BFS hop distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

GraphMetrics metrics(const Graph& g);

bool is_connected(const Graph& g);

// Edges whose deletion disconnects the graph, via DFS low-links.
// Returned in colex order.
std::vector<std::pair<int, int>> bridges(const Graph& g);

// Number of edges with exactly one endpoint in s.
int cut_edges_between(const Graph& g, const std::vector<int>& s);

}  // namespace specgap

#endif
