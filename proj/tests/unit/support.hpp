// Brute-force helpers shared by the unit tests. Nothing here calls into the
// library code it is used to check.
#pragma once

#include "condgraph/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <vector>

namespace testsupport {

using condgraph::Graph;

// All graphs on n labelled vertices, connected or not (n <= 6).
inline std::vector<Graph> all_labelled(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1UL) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(g);
  }
  return out;
}

inline bool connected_bfs(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v) && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return std::count(seen.begin(), seen.end(), 1) == n;
}

// Two-colouring by trying every colouring.
inline bool bipartite_brute(const Graph& g) {
  const int n = g.order();
  for (unsigned long c = 0; c < (1UL << n); ++c) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (((c >> u) & 1UL) == ((c >> v) & 1UL)) ok = false;
    if (ok) return true;
  }
  return false;
}

// Isomorphism by trying every permutation; loops must map to loops.
inline bool isomorphic_brute(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count() || a.loop_count() != b.loop_count())
    return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u) {
      if (a.has_loop(u) != b.has_loop(p[u])) ok = false;
      for (int v = u + 1; v < a.order() && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(p[u], p[v])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Eigen::MatrixXd dense(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

// Moore-Penrose inverse through the eigendecomposition; entry (u, v) is a
// nonzero multiple of the j_a quantity.
inline Eigen::MatrixXd pseudo_inverse(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(g));
  const Eigen::VectorXd& l = es.eigenvalues();
  const Eigen::MatrixXd& x = es.eigenvectors();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (int i = 0; i < g.order(); ++i)
    if (std::abs(l[i]) > 1e-8) p += x.col(i) * x.col(i).transpose() / l[i];
  return p;
}

inline int float_nullity(const Graph& g) {
  if (g.order() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(g));
  int k = 0;
  for (int i = 0; i < g.order(); ++i)
    if (std::abs(es.eigenvalues()[i]) < 1e-8) ++k;
  return k;
}

}  // namespace testsupport
