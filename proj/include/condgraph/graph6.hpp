// graph6.hpp - the graph6 interchange format (simple graphs only).
//
// Layout: a size header N(n) followed by the upper triangle of the adjacency
// matrix read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// six bits per byte, each byte offset by 63. n <= 62 uses the one-byte
// header; 63 and 64 use the '~' + three byte form.
#pragma once

#include "condgraph/graph.hpp"

#include <string>
#include <string_view>

namespace condgraph {

/// Parses one graph6 record. An optional ">>graph6<<" prefix is accepted.
/// Throws Graph6Error naming the offending byte offset.
Graph from_graph6(std::string_view text);

/// Encodes a simple graph. Throws DomainError if g carries loops.
std::string to_graph6(const Graph& g);

}  // namespace condgraph
