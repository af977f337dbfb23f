#pragma once

#include <string>
#include <vector>

#include "immpoly/graph.hpp"

namespace immpoly {

// graph6: printable encoding of a simple undirected graph.  The order is
// encoded first (one byte for n <= 62, '~' + 3 bytes for n <= 258047),
// followed by the upper triangle read column by column -- bit (i,j) for
// i < j ordered by (j, i) -- packed big-endian, 6 bits per byte, each byte
// offset by 63.  Padding bits must be zero.
//
// parse_graph6 throws std::invalid_argument on out-of-range characters, a
// malformed length header, wrong body length, or nonzero padding bits.
Graph parse_graph6(const std::string& s);
std::string emit_graph6(const Graph& g);

// Lines from a graph6 file; blank lines, '#' comments, and an optional
// ">>graph6<<" header are skipped.
std::vector<std::string> read_graph6_lines(const std::string& path);

}  // namespace immpoly
