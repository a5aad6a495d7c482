// conduction.hpp - device verdicts at the Fermi level and the conduction
// graph G^C of a connected simple graph.
#pragma once

#include "condgraph/exact_linalg.hpp"
#include "condgraph/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace condgraph {

/// (eta(G), eta(G-u), eta(G-v), eta(G-u-v)); the last is absent for ipso
/// devices (u == v).
struct NullitySignature {
  int eta_g = 0;
  int eta_gu = 0;
  int eta_gv = 0;
  std::optional<int> eta_guv;

  bool ipso() const { return !eta_guv.has_value(); }
  friend bool operator==(const NullitySignature&, const NullitySignature&) = default;
};

/// Rows of the selection-rule table. Distinct rows are named by the nullity
/// offsets of G-u, G-v, G-u-v relative to G, ordered so that the G-u offset
/// is not below the G-v offset. The all-equal row has no fixed answer and is
/// never reported; devices on it carry kEqualNullityJTest instead.
enum class SelectionRule {
  kUpUpUp2,        // (+1, +1, +2)  insulates
  kUpUpSame,       // (+1, +1,  0)  conducts
  kUpSameUp,       // (+1,  0, +1)  insulates
  kUpSameSame,     // (+1,  0,  0)  conducts
  kUpDownSame,     // (+1, -1,  0)  insulates
  kSameSameUp,     // ( 0,  0, +1)  conducts
  kSameSameSame,   // ( 0,  0,  0)  undecided by nullities alone
  kSameDownDown,   // ( 0, -1, -1)  insulates
  kDownDownSame,   // (-1, -1,  0)  conducts
  kDownDownDown,   // (-1, -1, -1)  conducts
  kDownDownDown2,  // (-1, -1, -2)  insulates
  kIpsoUp,         // (+1)  insulates
  kIpsoSame,       // ( 0)  conducts
  kIpsoDown,       // (-1)  conducts
  kEqualNullityJTest,
};

std::string to_string(SelectionRule rule);

/// Table lookup. Throws ConsistencyError for a signature no row covers.
SelectionRule match_rule(const NullitySignature& sig);

/// The fixed answer of a row; nullopt for kSameSameSame and the j-test.
std::optional<bool> rule_answer(SelectionRule rule);

struct DeviceVerdict {
  bool conducts = false;
  SelectionRule rule = SelectionRule::kEqualNullityJTest;
  NullitySignature signature;
};

/// Replace nonzero off-diagonal entries by 1 and nonzero diagonal entries by
/// 2. Throws DomainError for a non-square or non-symmetric matrix.
template <class Derived>
AdjacencyMatrix<int> booleanise(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw DomainError("booleanise needs a square matrix");
  const Eigen::Index n = m.rows();
  AdjacencyMatrix<int> out = AdjacencyMatrix<int>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw DomainError("booleanise needs a symmetric matrix");
      if (m(i, j) != 0) out(i, j) = (i == j) ? 2 : 1;
    }
  }
  return out;
}

using SupportMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Nonzero pattern of A^-1, or nullopt when A is singular.
std::optional<SupportMatrix> inverse_support(const AdjacencyMatrix<int>& a);

NullitySignature nullity_signature(const Graph& g, int u, int v);

/// u*t - s*v for s, t, u, v the characteristic polynomials of G, G-l, G-r
/// and G-l-r. Always the square of an integer polynomial.
IntPolynomial jacobi_numerator(const IntPolynomial& s, const IntPolynomial& t,
                               const IntPolynomial& u, const IntPolynomial& v);

/// Conducts iff u*t - s*v has exactly 2*eta zero roots.
bool equal_nullity_jtest(const IntPolynomial& s, const IntPolynomial& t, const IntPolynomial& u,
                         const IntPolynomial& v, int eta);
bool equal_nullity_jtest(const Graph& g, int l, int r);

/// Selection-rule verdict for one device; the j-test settles the all-equal
/// row. Requires g simple and connected.
DeviceVerdict device_verdict(const Graph& g, int u, int v);

enum class ConductionMethod {
  kAutomatic,       // inverse for nullity 0, block form for nullity 1, else rules
  kSelectionRules,  // every device through device_verdict
};

struct ConductionGraph {
  Graph graph;
  /// Packed upper triangle including the diagonal; use verdict(u, v).
  std::vector<DeviceVerdict> verdicts;
  ConductionMethod method = ConductionMethod::kAutomatic;

  const DeviceVerdict& verdict(int u, int v) const;
};

int device_index(int n, int u, int v);

ConductionGraph conduction_graph(const Graph& g,
                                 ConductionMethod method = ConductionMethod::kAutomatic);

enum class VertexKind { kCore, kMiddle, kUpper };

struct Nullity1Blocks {
  std::vector<VertexKind> kind;
  VertexSet core = 0;
  VertexSet middle = 0;
  VertexSet upper = 0;
  RationalVector kernel_vector;
  ConductionGraph conduction;
};

/// Core vertices are the support of the kernel vector; their block of G^C
/// is complete with loops and they see nothing else. Only the remaining
/// pairs go through the selection rules. Throws DomainError unless
/// nullity(g) == 1.
Nullity1Blocks conduction_graph_nullity1_blocks(const Graph& g);

}  // namespace condgraph
