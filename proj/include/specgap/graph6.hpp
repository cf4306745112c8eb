#ifndef SPECGAP_GRAPH6_HPP
#define SPECGAP_GRAPH6_HPP

#include <string>
#include <string_view>

#include "specgap/graph.hpp"

namespace specgap {

// graph6 short form, n <= 62. Byte 0 is n+63; then the upper-triangle bits
// x(i,j) for columns j = 1..n-1, rows i = 0..j-1, packed MSB-first into
// 6-bit groups, zero-padded, each group stored as group+63.
std::string graph6_encode(const Graph& g);

// Strict inverse of graph6_encode: wrong length, out-of-range bytes and
// nonzero padding all raise FormatError, so encode(decode(x)) == x.
Graph graph6_decode(std::string_view bytes);

// Plain text edge list: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace specgap

#endif
