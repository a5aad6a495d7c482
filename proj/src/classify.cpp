#include "condgraph/classify.hpp"

#include "condgraph/isomorphism.hpp"

#include <algorithm>

namespace condgraph {

namespace {

struct Tally {
  int conducting = 0;
  int total = 0;

  void add(bool conducts) {
    ++total;
    if (conducts) ++conducting;
  }
  char letter() const {
    if (total == 0) return 'X';
    if (conducting == total) return 'C';
    if (conducting == 0) return 'I';
    return 'X';
  }
};

int graph_nullity(const Graph& g) { return nullity(adjacency_matrix(g)); }

}  // namespace

std::string ClassCode::two_letter() const {
  return std::string{distinct, ipso} + std::to_string(nullity_digit);
}

std::string ClassCode::three_letter() const {
  return std::string{distinct_odd, distinct_even, ipso} + std::to_string(nullity_digit);
}

ClassCode class_code(const Graph& g) { return class_code(g, conduction_graph(g)); }

ClassCode class_code(const Graph& g, const ConductionGraph& gc) {
  const int n = g.order();
  Tally all, odd, even, ipso;
  for (int u = 0; u < n; ++u) {
    const std::vector<int> dist = distances_from(g, u);
    ipso.add(gc.graph.has_loop(u));
    for (int v = u + 1; v < n; ++v) {
      const bool conducts = gc.graph.has_edge(u, v);
      all.add(conducts);
      (dist[v] % 2 == 1 ? odd : even).add(conducts);
    }
  }
  ClassCode code;
  code.distinct = all.letter();
  code.distinct_odd = odd.letter();
  code.distinct_even = even.letter();
  code.ipso = ipso.letter();
  code.nullity_digit = std::min(gc.verdict(0, 0).signature.eta_g, 2);
  code.bipartite_reading = is_bipartite(g);
  code.odd_empty = odd.total == 0;
  code.even_empty = even.total == 0;
  return code;
}

bool is_ipso_omni_insulator(const Graph& g) {
  const ConductionGraph gc = conduction_graph(g);
  const bool result = gc.graph.loop_count() == 0;
  if (result && graph_nullity(g) != 0) {
    throw ConsistencyError("singular graph without conducting ipso devices");
  }
  return result;
}

bool is_nut(const Graph& g, bool allow_k1) {
  if (g.order() == 1) return allow_k1 && g.is_simple();
  if (!g.is_simple() || !is_connected(g)) return false;
  const KernelBasis basis = kernel_basis(adjacency_matrix(g));
  if (basis.dimension() != 1) return false;
  const RationalVector& x = basis.vectors.front();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) return false;
  }
  return true;
}

bool is_nut_by_adjugate(const Graph& g, bool allow_k1) {
  if (g.order() == 1) return allow_k1 && g.is_simple();
  if (!g.is_simple() || !is_connected(g)) return false;
  const AdjacencyMatrix<int> a = adjacency_matrix(g);
  if (determinant(a) != 0) return false;
  const Matrix<BigInt> adj = integer_adjugate(a);
  // Rank n-1 exactly when the adjugate is nonzero; then adj = alpha x x^T
  // and its diagonal alpha x_v^2 vanishes where x does.
  for (Eigen::Index v = 0; v < adj.rows(); ++v) {
    if (adj(v, v) == 0) return false;
  }
  return true;
}

bool is_uniform_core_graph(const Graph& g) {
  if (!g.is_simple() || !is_connected(g)) throw DomainError("classification needs a connected simple graph");
  const int n = g.order();
  const int eta = graph_nullity(g);
  if (eta < 2) return false;
  for (int v = 0; v < n; ++v) {
    if (graph_nullity(g.without(bit(v))) != eta - 1) return false;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (graph_nullity(g.without(bit(u) | bit(v))) != eta - 2) return false;
    }
  }
  const Graph gc = conduction_graph(g).graph;
  if (gc.edge_count() != 0 || gc.loop_count() != n) {
    throw ConsistencyError("uniform core graph whose conduction graph is not nK1 with loops");
  }
  return true;
}

std::optional<std::vector<int>> conduction_isomorphism(const Graph& g) {
  if (!g.is_simple() || !is_connected(g)) throw DomainError("classification needs a connected simple graph");
  const auto support = inverse_support(adjacency_matrix(g));
  if (!support) return std::nullopt;
  const int n = g.order();
  Graph gc(n);
  for (int u = 0; u < n; ++u) {
    if ((*support)(u, u)) return std::nullopt;
    for (int v = u + 1; v < n; ++v) {
      if ((*support)(u, v)) gc.add_edge(u, v);
    }
  }
  if (gc.edge_count() != g.edge_count() || degree_sequence(gc) != degree_sequence(g)) {
    return std::nullopt;
  }
  return find_isomorphism(g, gc);
}

bool cubic_degree_theorem_check(const Graph& g) {
  if (!g.is_simple() || !is_connected(g) || !is_regular(g, 3)) {
    throw DomainError("degree check needs a connected 3-regular graph");
  }
  const auto support = inverse_support(adjacency_matrix(g));
  if (!support) throw DomainError("degree check needs nullity 0");
  const int n = g.order();
  // Neighbours in G^C include u itself when u carries a loop.
  for (int u = 0; u < n; ++u) {
    if (support->col(u).count() < 4) return false;
  }
  return true;
}

ClassificationReport classify(const Graph& g) {
  if (!g.is_simple() || !is_connected(g)) throw DomainError("classification needs a connected simple graph");
  ClassificationReport r;
  const ConductionGraph gc = conduction_graph(g);
  r.nullity = gc.verdict(0, 0).signature.eta_g;
  r.ipso_omni_insulator = gc.graph.loop_count() == 0;
  if (r.ipso_omni_insulator && r.nullity != 0) {
    throw ConsistencyError("singular graph without conducting ipso devices");
  }
  r.nut = is_nut(g);
  r.uniform_core = is_uniform_core_graph(g);
  r.code = class_code(g, gc);
  r.conduction_components = component_count(gc.graph);
  r.conduction_loops = gc.graph.loop_count();
  if (r.ipso_omni_insulator) {
    r.witness = find_isomorphism(g, gc.graph);
    r.conduction_isomorphic = r.witness.has_value();
  }
  return r;
}

}  // namespace condgraph
