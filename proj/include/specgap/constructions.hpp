#ifndef SPECGAP_CONSTRUCTIONS_HPP
#define SPECGAP_CONSTRUCTIONS_HPP

#include <cstdint>

#include "specgap/graph.hpp"

namespace specgap {

// Double kite DK(r,s): two K_r copies joined by a path with s internal
// vertices. Layout: first clique 0..r-1 with terminal p_0 = 0, internal
// path vertices r..r+s-1, second clique r+s..2r+s-1 with terminal
// p_{s+1} = r+s.
Graph double_kite(int r, int s);

// Two deterministic d-regular circulants on (n-D+1)/2 vertices each,
// joined by a path of D edges (vertex 0 of H1 to vertex 0 of H2).
// Layout: H1 first, then the D-1 internal path vertices, then H2.
Graph joined_regular_pair(int n, int diameter_d, int degree);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// d-dimensional hypercube; vertices are d-bit strings, edges at Hamming
// distance 1.
Graph hypercube(int d);

// Erdos-Renyi G(n,p) resampled until connected; deterministic given seed.
// Throws SamplingFailure after 1000 consecutive disconnected samples.
Graph random_connected(int n, double p, uint64_t seed);

}  // namespace specgap

#endif
