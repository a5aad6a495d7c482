// isomorphism.hpp - canonical labelling and isomorphism tests for graphs
// with loops. Loops act as a vertex colouring, never as degree.
#pragma once

#include "condgraph/graph.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace condgraph {

struct CanonicalForm {
  std::string graph6;  // simple part under the canonical relabelling
  VertexSet loops = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  /// position[v] is the canonical index of vertex v.
  std::vector<int> position;
  /// g.permuted(position).
  Graph canonical;
  /// orbit[v] is the smallest vertex in v's orbit under the automorphisms
  /// that preserve loops and the supplied colours.
  std::vector<int> orbit;
  /// Automorphisms met during the search; they generate the whole group.
  std::vector<std::vector<int>> generators;
};

/// Individualisation-refinement search: equitable refinement by neighbour
/// counts, branching on the first non-singleton cell, pruned by the
/// automorphisms found so far. `colours` (optional, one per vertex) must be
/// preserved by every automorphism.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours = {});

CanonicalForm canonical_form(const Graph& g);

/// Whether `h` maps edges onto edges and loops onto loops.
bool is_isomorphism(const Graph& from, const Graph& to, const std::vector<int>& h);

/// A bijection h with uv in E(a) <=> h(u)h(v) in E(b) (and loops likewise),
/// checked edge by edge before it is returned.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace condgraph
