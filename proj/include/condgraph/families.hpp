// families.hpp - infinite families of conduction-isomorphic graphs and the
// explicit isomorphisms onto their conduction graphs.
//
// Vertices are numbered in the block order of the defining adjacency
// matrices, 0-based, so the witness maps apply verbatim.
#pragma once

#include "condgraph/graph.hpp"
#include "condgraph/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace condgraph {

/// f(n, a): row i has its single 1 in column i + a when i is even and in
/// column i - a when i is odd, indices mod n.
Matrix<int> f_matrix(int n, int a);

/// P(n) with P_{i, i-1} = 1, indices mod n.
Matrix<int> cyclic_permutation(int n);

/// Attach a pendant vertex to every vertex, `iterations` times. Adjacency
/// [[A, I], [I, 0]] at each step; pendant j + N hangs off vertex j.
Graph corona(const Graph& base, int iterations = 1);

/// Each base eigenvalue l contributes (l + sqrt(l^2 + 4)) / 2 and
/// (l - sqrt(l^2 + 4)) / 2. Returned in descending order.
std::vector<double> corona_spectrum(const std::vector<double>& base_eigenvalues);

/// 4k vertices: [[f(2k,1) + f(2k,-1), I], [I, f(2k,1)]]. k >= 2.
Graph min_deg2_graph(int k);

/// 2k vertices: [[J-I, J-I-P], [J-I-P^-1, J-I-P^-1-P]]. k >= 3.
Graph large_min_deg_graph(int k);

/// Vertex (u, j) is u + j*n; edges (u, j)(v, 1-j) for every edge uv.
Graph canonical_double_cover(const Graph& base);

/// 4k-4 vertices: a path on 0..2k-1, vertex 3+j joined to 2k+j for
/// j < 2k-4, and the second block matched by f(2k-4, 1). k >= 3.
Graph appendix_family_graph(int k);

enum class Family { kCorona, kComb, kRadialene, kMinDeg2, kLargeMinDeg, kCdc, kAppendix };

std::string to_string(Family family);
/// Throws DomainError for an unknown name.
Family family_from_string(std::string_view name);

struct FamilySpec {
  Family family = Family::kMinDeg2;
  /// Iterations for corona, path/cycle order for comb/radialene, k otherwise.
  int k = 0;
  /// Base graph for corona and cdc.
  std::optional<Graph> base;
  /// For cdc: an isomorphism of the base onto its conduction graph. When
  /// absent it is searched for.
  std::optional<std::vector<int>> base_witness;
};

/// Throws DomainError when the parameters are out of range.
Graph generate(const FamilySpec& spec);

/// The family's closed-form bijection G -> G^C. Not checked here.
std::vector<int> witness_isomorphism(const FamilySpec& spec);

}  // namespace condgraph
