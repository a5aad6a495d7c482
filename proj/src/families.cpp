#include "condgraph/families.hpp"

#include "condgraph/classify.hpp"
#include "condgraph/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace condgraph {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Matrix<int> identity(int n) { return Matrix<int>::Identity(n, n); }
Matrix<int> ones(int n) { return Matrix<int>::Ones(n, n); }

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Matrix<int> f_matrix(int n, int a) {
  Matrix<int> m = Matrix<int>::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, mod(i % 2 == 0 ? i + a : i - a, n)) = 1;
  return m;
}

Matrix<int> cyclic_permutation(int n) {
  Matrix<int> p = Matrix<int>::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, mod(i - 1, n)) = 1;
  return p;
}

Graph corona(const Graph& base, int iterations) {
  require(iterations >= 1, "corona needs at least one iteration");
  require(base.order() >= 1, "corona needs a nonempty base");
  Graph g = base;
  for (int it = 0; it < iterations; ++it) {
    const int n = g.order();
    require(2 * n <= kMaxOrder, "corona exceeds 64 vertices");
    Matrix<int> a = Matrix<int>::Zero(2 * n, 2 * n);
    a.topLeftCorner(n, n) = adjacency_matrix(g);
    a.topRightCorner(n, n) = identity(n);
    a.bottomLeftCorner(n, n) = identity(n);
    g = graph_from_adjacency(a);
  }
  return g;
}

std::vector<double> corona_spectrum(const std::vector<double>& base_eigenvalues) {
  std::vector<double> out;
  out.reserve(2 * base_eigenvalues.size());
  for (double l : base_eigenvalues) {
    const double root = std::sqrt(l * l + 4.0);
    out.push_back((l + root) / 2.0);
    out.push_back((l - root) / 2.0);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Graph min_deg2_graph(int k) {
  require(k >= 2, "min_deg2 needs k >= 2");
  require(4 * k <= kMaxOrder, "min_deg2 exceeds 64 vertices");
  const int n = 2 * k;
  Matrix<int> a(2 * n, 2 * n);
  a << f_matrix(n, 1) + f_matrix(n, -1), identity(n),
       identity(n), f_matrix(n, 1);
  return graph_from_adjacency(a);
}

Graph large_min_deg_graph(int k) {
  require(k >= 3, "large_min_deg needs k >= 3");
  require(2 * k <= kMaxOrder, "large_min_deg exceeds 64 vertices");
  const Matrix<int> j_i = ones(k) - identity(k);
  const Matrix<int> p = cyclic_permutation(k);
  const Matrix<int> p_inv = p.transpose();
  Matrix<int> a(2 * k, 2 * k);
  a << j_i, j_i - p,
       j_i - p_inv, j_i - p_inv - p;
  return graph_from_adjacency(a);
}

Graph canonical_double_cover(const Graph& base) {
  const int n = base.order();
  require(2 * n <= kMaxOrder, "double cover exceeds 64 vertices");
  require(base.is_simple(), "double cover needs a simple base");
  Graph g(2 * n);
  for (auto [u, v] : base.edges()) {
    g.add_edge(u, v + n);
    g.add_edge(v, u + n);
  }
  return g;
}

Graph appendix_family_graph(int k) {
  require(k >= 3, "appendix family needs k >= 3");
  require(4 * k - 4 <= kMaxOrder, "appendix family exceeds 64 vertices");
  const int n = 2 * k;
  const int m = 2 * k - 4;
  Matrix<int> top = f_matrix(n, 1) + f_matrix(n, -1);
  top(0, n - 1) -= 1;
  top(n - 1, 0) -= 1;
  Matrix<int> link = Matrix<int>::Zero(n, m);
  link.middleRows(3, m) = identity(m);
  Matrix<int> a(n + m, n + m);
  a << top, link,
       link.transpose(), f_matrix(m, 1);
  return graph_from_adjacency(a);
}

std::string to_string(Family family) {
  switch (family) {
    case Family::kCorona: return "corona";
    case Family::kComb: return "comb";
    case Family::kRadialene: return "radialene";
    case Family::kMinDeg2: return "min_deg2";
    case Family::kLargeMinDeg: return "large_min_deg";
    case Family::kCdc: return "cdc";
    case Family::kAppendix: return "appendix";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::kCorona, Family::kComb, Family::kRadialene, Family::kMinDeg2,
                   Family::kLargeMinDeg, Family::kCdc, Family::kAppendix}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kCorona:
      require(spec.base.has_value(), "corona needs a base graph");
      return corona(*spec.base, spec.k);
    case Family::kComb:
      require(spec.k >= 1, "comb needs a path of at least one vertex");
      return corona(path_graph(spec.k));
    case Family::kRadialene:
      require(spec.k >= 3, "radialene needs a cycle of at least three vertices");
      return corona(cycle_graph(spec.k));
    case Family::kMinDeg2: return min_deg2_graph(spec.k);
    case Family::kLargeMinDeg: return large_min_deg_graph(spec.k);
    case Family::kCdc:
      require(spec.base.has_value(), "cdc needs a base graph");
      return canonical_double_cover(*spec.base);
    case Family::kAppendix: return appendix_family_graph(spec.k);
  }
  throw DomainError("unsupported family");
}

std::vector<int> witness_isomorphism(const FamilySpec& spec) {
  const int order = generate(spec).order();
  std::vector<int> h(static_cast<std::size_t>(order));
  const int k = spec.k;
  switch (spec.family) {
    case Family::kCorona:
    case Family::kComb:
    case Family::kRadialene: {
      const int half = order / 2;
      for (int u = 0; u < order; ++u) h[u] = u < half ? u + half : u - half;
      return h;
    }
    case Family::kMinDeg2:
      for (int u = 0; u < order; ++u) {
        if (u < 2 * k) {
          h[u] = u % 2 == 0 ? u + 2 * k : mod(u + 2, 2 * k) + 2 * k;
        } else {
          h[u] = u % 2 == 0 ? mod(u + 2, 2 * k) : u - 2 * k;
        }
      }
      return h;
    case Family::kLargeMinDeg:
      for (int u = 0; u < order; ++u) h[u] = u < k ? k + mod(u - 1, k) : u - k;
      return h;
    case Family::kCdc: {
      const Graph& base = *spec.base;
      std::vector<int> inner;
      if (spec.base_witness) {
        inner = *spec.base_witness;
      } else if (auto found = conduction_isomorphism(base)) {
        inner = *found;
      } else {
        throw DomainError("cdc witness needs a conduction-isomorphic base");
      }
      const int n = base.order();
      for (int u = 0; u < n; ++u) {
        h[u] = inner[u];
        h[u + n] = inner[u] + n;
      }
      return h;
    }
    case Family::kAppendix:
      for (int u = 0; u < order; ++u) {
        if (u == 0 || u == 1) {
          h[u] = 2 * k - 2 + u;
        } else if (u == 2 * k - 2 || u == 2 * k - 1) {
          h[u] = u - (2 * k - 2);
        } else if (u % 2 == 0) {
          h[u] = 4 * k - 4 - u;
        } else {
          h[u] = 4 * k - 2 - u;
        }
      }
      return h;
  }
  throw DomainError("unsupported family");
}

}  // namespace condgraph
