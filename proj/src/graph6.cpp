#include "specgap/graph6.hpp"

#include <sstream>
#include <string>

namespace specgap {

namespace {
constexpr int kOffset = 63;
constexpr int kMaxShortForm = 62;
}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxShortForm)
        throw FormatError("graph6 short form supports at most 62 vertices, got " +
                          std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));

    int group = 0;
    int bits_in_group = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits_in_group == 6) {
                out.push_back(static_cast<char>(group + kOffset));
                group = 0;
                bits_in_group = 0;
            }
        }
    }
    if (bits_in_group > 0) {
        group <<= (6 - bits_in_group);
        out.push_back(static_cast<char>(group + kOffset));
    }
    return out;
}

Graph graph6_decode(std::string_view bytes) {
    if (bytes.empty()) throw FormatError("empty graph6 string");
    for (char c : bytes) {
        unsigned char b = static_cast<unsigned char>(c);
        if (b < kOffset || b > 126) throw FormatError("byte out of graph6 range");
    }
    int n = static_cast<unsigned char>(bytes[0]) - kOffset;
    if (n > kMaxShortForm)
        throw FormatError("only short-form graph6 (n <= 62) is supported");

    const long long pair_bits = static_cast<long long>(n) * (n - 1) / 2;
    const size_t expected = 1 + static_cast<size_t>((pair_bits + 5) / 6);
    if (bytes.size() != expected)
        throw FormatError("graph6 length mismatch: expected " + std::to_string(expected) +
                          " bytes, got " + std::to_string(bytes.size()));

    Graph g(n);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int group = static_cast<unsigned char>(bytes[1 + bit / 6]) - kOffset;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero or the byte round trip breaks.
    for (; bit < static_cast<long long>(bytes.size() - 1) * 6; ++bit) {
        int group = static_cast<unsigned char>(bytes[1 + bit / 6]) - kOffset;
        if ((group >> (5 - bit % 6)) & 1) throw FormatError("nonzero padding bits");
    }
    return g;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw FormatError("edge list must start with \"n m\"");
    if (n < 0 || m < 0) throw FormatError("negative counts in edge list header");
    if (n > kMaxVertices) throw FormatError("vertex count exceeds cap");
    Graph g(static_cast<int>(n));
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v))
            throw FormatError("edge list ended after " + std::to_string(k) + " of " +
                              std::to_string(m) + " edges");
        if (u < 0 || u >= n || v < 0 || v >= n) throw FormatError("edge endpoint out of range");
        if (u == v) throw FormatError("self-loop in edge list");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace specgap
