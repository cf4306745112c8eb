#include "specgap/constructions.hpp"

#include <random>
#include <string>

namespace specgap {

namespace {

void add_clique(Graph& g, int first, int count) {
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) g.add_edge(first + i, first + j);
}

// Circulant on h vertices: i ~ i +- 1..d/2, plus the antipode when d is odd
// (requires h even). This is the deterministic d-regular building block.
void add_circulant(Graph& g, int first, int h, int d) {
    for (int k = 1; k <= d / 2; ++k)
        for (int i = 0; i < h; ++i) g.add_edge(first + i, first + (i + k) % h);
    if (d % 2 == 1)
        for (int i = 0; i < h / 2; ++i) g.add_edge(first + i, first + i + h / 2);
}

}  // namespace

Graph double_kite(int r, int s) {
    if (r < 1) throw InvalidParams("double_kite requires r >= 1");
    if (s < 0) throw InvalidParams("double_kite requires s >= 0");
    const long long n = 2LL * r + s;
    if (n > kMaxVertices) throw InvalidParams("double_kite size exceeds vertex cap");
    Graph g(static_cast<int>(n));
    add_clique(g, 0, r);
    add_clique(g, r + s, r);
    // Path p_0, p_1, ..., p_s, p_{s+1} with terminals in the cliques.
    int prev = 0;
    for (int i = 0; i < s; ++i) {
        g.add_edge(prev, r + i);
        prev = r + i;
    }
    g.add_edge(prev, r + s);
    return g;
}

Graph joined_regular_pair(int n, int diameter_d, int degree) {
    const int D = diameter_d, d = degree;
    if (D < 1) throw InvalidParams("path length D must be >= 1");
    const long long hh = static_cast<long long>(n) - D + 1;
    if (hh < 4 || hh % 2 != 0)
        throw InvalidParams("n-D+1 = " + std::to_string(hh) +
                            " does not split into two equal regular graphs");
    const int h = static_cast<int>(hh / 2);
    if (d < 1 || d >= h) throw InvalidParams("regular degree d must satisfy 1 <= d < (n-D+1)/2");
    if (d % 2 == 1 && h % 2 == 1)
        throw InvalidParams("d-regular graph on " + std::to_string(h) +
                            " vertices needs d*h even");
    if (d == 1 && h > 2)
        throw InvalidParams("1-regular halves are perfect matchings, never connected");
    if (n > kMaxVertices) throw InvalidParams("size exceeds vertex cap");

    Graph g(n);
    add_circulant(g, 0, h, d);
    const int h2_first = h + D - 1;
    add_circulant(g, h2_first, h, d);
    // Path of D edges from vertex 0 of H1 to vertex 0 of H2 through the
    // D-1 internal vertices h..h+D-2.
    int prev = 0;
    for (int i = 0; i < D - 1; ++i) {
        g.add_edge(prev, h + i);
        prev = h + i;
    }
    g.add_edge(prev, h2_first);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw InvalidParams("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidParams("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw InvalidParams("complete graph needs n >= 1");
    Graph g(n);
    add_clique(g, 0, n);
    return g;
}

Graph hypercube(int d) {
    if (d < 1) throw InvalidParams("hypercube needs d >= 1");
    if (d > 13) throw InvalidParams("hypercube dimension exceeds vertex cap");
    const int n = 1 << d;
    Graph g(n);
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < d; ++b)
            if (x < (x ^ (1 << b))) g.add_edge(x, x ^ (1 << b));
    return g;
}

Graph random_connected(int n, double p, uint64_t seed) {
    if (n < 2) throw InvalidParams("random_connected needs n >= 2");
    if (n > kMaxVertices) throw InvalidParams("size exceeds vertex cap");
    if (!(p > 0.0) || p > 1.0) throw InvalidParams("edge probability must be in (0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (coin(rng) < p) g.add_edge(i, j);
        if (is_connected(g)) return g;
    }
    throw SamplingFailure("no connected sample in 1000 attempts; p too small for n=" +
                          std::to_string(n));
}

}  // namespace specgap
