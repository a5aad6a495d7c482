// graph.hpp - undirected graphs on at most 64 vertices, stored as one
// adjacency word per vertex plus a separate loop set.
#pragma once

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace condgraph {

using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet low_bits(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

template <class Fn>
void for_each_vertex(VertexSet set, Fn&& fn) {
  while (set != 0) {
    const int v = std::countr_zero(set);
    set &= set - 1;
    fn(v);
  }
}

class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::initializer_list<std::pair<int, int>> edges);
  Graph(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const { return order_; }
  VertexSet vertices() const { return low_bits(order_); }

  VertexSet neighbours(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  bool has_loop(int v) const { return (loops_ >> v) & 1U; }
  VertexSet loops() const { return loops_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void add_loop(int v);

  /// Number of neighbours, not counting a loop.
  int degree(int v) const { return std::popcount(adj_[v]); }
  int edge_count() const;
  int loop_count() const { return std::popcount(loops_); }
  bool is_simple() const { return loops_ == 0; }

  /// Induced subgraph on `keep`, vertices renumbered in increasing order.
  Graph induced(VertexSet keep) const;
  Graph without(VertexSet removed) const { return induced(vertices() & ~removed); }

  /// Relabel so that vertex v becomes perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  VertexSet loops_ = 0;
  std::vector<VertexSet> adj_;
};

/// Integer adjacency matrix: 1 per edge, 2 on the diagonal for a loop.
template <class Scalar = int>
using AdjacencyMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar = int>
AdjacencyMatrix<Scalar> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  AdjacencyMatrix<Scalar> a = AdjacencyMatrix<Scalar>::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for_each_vertex(g.neighbours(u), [&](int v) { a(u, v) = Scalar(1); });
    if (g.has_loop(u)) a(u, u) = Scalar(2);
  }
  return a;
}

/// Inverse of adjacency_matrix: 0 means no edge, 1 an edge, 2 on the
/// diagonal a loop. Any other entry is rejected.
Graph graph_from_adjacency(const AdjacencyMatrix<int>& a);

// Structural predicates.
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
/// Connected, simple and maximum degree at most three.
bool is_chemical(const Graph& g);
bool is_regular(const Graph& g, int degree);
std::vector<int> degree_sequence(const Graph& g);  // ascending
int component_count(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
/// Vertices whose removal disconnects their component.
VertexSet cut_vertices(const Graph& g);
/// Breadth-first distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// Disjoint union, vertices of `b` shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Small named graphs used throughout the tests and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves);

}  // namespace condgraph
