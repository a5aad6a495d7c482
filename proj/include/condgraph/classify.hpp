// classify.hpp - graph-level conduction classes.
#pragma once

#include "condgraph/conduction.hpp"
#include "condgraph/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace condgraph {

/// Letters are 'C' (every device of the class conducts), 'I' (every device
/// insulates) or 'X' (mixed, or the class is empty).
struct ClassCode {
  char distinct = 'X';
  char distinct_odd = 'X';
  char distinct_even = 'X';
  char ipso = 'X';
  int nullity_digit = 0;  // 0, 1, or 2 for nullity >= 2
  /// For bipartite graphs odd/even distance reads as inter/intra partite.
  bool bipartite_reading = false;
  bool odd_empty = false;
  bool even_empty = false;

  std::string two_letter() const;    // e.g. "CC1"
  std::string three_letter() const;  // e.g. "CXI0"
};

ClassCode class_code(const Graph& g);
ClassCode class_code(const Graph& g, const ConductionGraph& gc);

bool is_ipso_omni_insulator(const Graph& g);

/// Nullity one with a kernel vector free of zeros. K1 qualifies only with
/// `allow_k1`.
bool is_nut(const Graph& g, bool allow_k1 = false);

/// The same question answered from the adjugate: adj(A) = alpha x x^T has a
/// zero-free diagonal exactly for nut graphs.
bool is_nut_by_adjugate(const Graph& g, bool allow_k1 = false);

bool is_uniform_core_graph(const Graph& g);

/// Bijection from G onto G^C when G is conduction-isomorphic. Cheap filters
/// run first: nonsingular, loopless G^C, matching degree sequences.
std::optional<std::vector<int>> conduction_isomorphism(const Graph& g);

inline bool is_conduction_isomorphic(const Graph& g) {
  return conduction_isomorphism(g).has_value();
}

/// Whether every vertex of G^C has at least four neighbours, a loop counting
/// as one. Requires a 3-regular graph of nullity 0 (DomainError otherwise).
bool cubic_degree_theorem_check(const Graph& g);

struct ClassificationReport {
  int nullity = 0;
  bool ipso_omni_insulator = false;
  bool nut = false;
  bool uniform_core = false;
  bool conduction_isomorphic = false;
  std::optional<std::vector<int>> witness;
  ClassCode code;
  int conduction_components = 0;
  int conduction_loops = 0;
};

ClassificationReport classify(const Graph& g);

}  // namespace condgraph
