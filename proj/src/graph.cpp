#include "condgraph/graph.hpp"

#include "condgraph/errors.hpp"

#include <algorithm>

namespace condgraph {

Graph::Graph(int order) : order_(order), adj_(static_cast<std::size_t>(order), 0) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError("graph order " + std::to_string(order) + " outside 0..64");
  }
}

Graph::Graph(int order, std::initializer_list<std::pair<int, int>> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw DomainError("vertex " + std::to_string(v) + " outside graph of order " +
                      std::to_string(order_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    add_loop(u);
    return;
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

void Graph::add_loop(int v) {
  check_vertex(v);
  loops_ |= bit(v);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += std::popcount(row);
  return twice / 2;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> index(static_cast<std::size_t>(order_), -1);
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[v] = next++; });
  Graph h(next);
  for_each_vertex(keep, [&](int u) {
    const int iu = index[u];
    VertexSet row = 0;
    for_each_vertex(adj_[u] & keep, [&](int v) { row |= bit(index[v]); });
    h.adj_[iu] = row;
    if (has_loop(u)) h.loops_ |= bit(iu);
  });
  return h;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != order_) {
    throw DomainError("permutation length does not match graph order");
  }
  Graph h(order_);
  for (int u = 0; u < order_; ++u) {
    VertexSet row = 0;
    for_each_vertex(adj_[u], [&](int v) { row |= bit(perm[v]); });
    h.adj_[perm[u]] = row;
    if (has_loop(u)) h.loops_ |= bit(perm[u]);
  }
  return h;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    for_each_vertex(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph graph_from_adjacency(const AdjacencyMatrix<int>& a) {
  if (a.rows() != a.cols()) throw DomainError("adjacency matrix must be square");
  const int n = static_cast<int>(a.rows());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int x = a(u, v);
      if (x != a(v, u)) throw DomainError("adjacency matrix must be symmetric");
      if (u == v) {
        if (x == 2) {
          g.add_loop(u);
        } else if (x != 0) {
          throw DomainError("diagonal adjacency entries must be 0 or 2");
        }
      } else if (x == 1) {
        if (u < v) g.add_edge(u, v);
      } else if (x != 0) {
        throw DomainError("off-diagonal adjacency entries must be 0 or 1");
      }
    }
  }
  return g;
}

namespace {

VertexSet reach(const Graph& g, int source, VertexSet allowed) {
  VertexSet seen = bit(source);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbours(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left != 0) {
    const VertexSet c = reach(g, std::countr_zero(left), g.vertices());
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return reach(g, 0, g.vertices()) == g.vertices();
}

bool is_bipartite(const Graph& g) {
  if (g.loops() != 0) return false;
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      bool ok = true;
      for_each_vertex(g.neighbours(u), [&](int v) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_chemical(const Graph& g) {
  if (!g.is_simple() || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 3) return false;
  }
  return true;
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

VertexSet cut_vertices(const Graph& g) {
  VertexSet cuts = 0;
  for (const VertexSet comp : components(g)) {
    if (std::popcount(comp) < 3) continue;
    for_each_vertex(comp, [&](int v) {
      const VertexSet rest = comp & ~bit(v);
      if (reach(g, std::countr_zero(rest), rest) != rest) cuts |= bit(v);
    });
  }
  return cuts;
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[source] = 0;
  VertexSet seen = bit(source);
  VertexSet frontier = seen;
  for (int d = 1; frontier != 0; ++d) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbours(v); });
    next &= ~seen;
    for_each_vertex(next, [&](int v) { dist[v] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  for_each_vertex(a.loops(), [&](int v) { g.add_loop(v); });
  for_each_vertex(b.loops(), [&](int v) { g.add_loop(v + a.order()); });
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

}  // namespace condgraph
