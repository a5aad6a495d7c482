#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "condgraph/classify.hpp"
#include "condgraph/errors.hpp"
#include "condgraph/exact_linalg.hpp"
#include "condgraph/families.hpp"
#include "condgraph/fixtures.hpp"
#include "condgraph/isomorphism.hpp"

#include <algorithm>

using namespace condgraph;

namespace {

int min_degree(const Graph& g) {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool witness_holds(const FamilySpec& spec) {
  const Graph g = generate(spec);
  return is_isomorphism(g, conduction_graph(g).graph, witness_isomorphism(spec));
}

}  // namespace

TEST_CASE("f matrices are symmetric permutation matrices for odd shifts") {
  for (int n = 2; n <= 12; n += 2) {
    for (int a : {1, -1, 3}) {
      const Matrix<int> f = f_matrix(n, a);
      REQUIRE(f == f.transpose());
      REQUIRE(f * f == Matrix<int>::Identity(n, n));
      for (int i = 0; i < n; ++i) REQUIRE(f.row(i).sum() == 1);
    }
  }
  const Matrix<int> p = cyclic_permutation(5);
  Matrix<int> power = Matrix<int>::Identity(5, 5);
  for (int i = 0; i < 5; ++i) power = power * p;
  CHECK(power == Matrix<int>::Identity(5, 5));
  CHECK(p(1, 0) == 1);
}

TEST_CASE("orthogonal 0-1 matrices are permutation matrices") {
  for (int n = 1; n <= 4; ++n) {
    for (unsigned mask = 0; mask < (1U << (n * n)); ++mask) {
      Matrix<int> m(n, n);
      for (int i = 0; i < n * n; ++i) m(i / n, i % n) = (mask >> i) & 1U;
      const bool orthogonal = m.transpose() * m == Matrix<int>::Identity(n, n);
      bool permutation = true;
      for (int i = 0; i < n; ++i) permutation = permutation && m.row(i).sum() == 1 && m.col(i).sum() == 1;
      REQUIRE(orthogonal == permutation);
    }
  }
}

TEST_CASE("coronas") {
  CHECK(corona(Graph(1)) == complete_graph(2));
  CHECK(is_conduction_isomorphic(corona(Graph(1))));
  const Graph comb = corona(path_graph(3));
  CHECK(comb.order() == 6);
  CHECK(are_isomorphic(comb, fixture("comb3")));
  CHECK(are_isomorphic(corona(cycle_graph(3)), fixture("radialene3")));
  const Graph twice = corona(cycle_graph(4), 2);
  CHECK(twice.order() == 16);
  CHECK(twice == corona(corona(cycle_graph(4))));
}

TEST_CASE("corona spectrum") {
  const auto k1 = corona_spectrum({0.0});
  REQUIRE(k1.size() == 2);
  CHECK(std::abs(k1[0] - 1.0) < 1e-12);
  CHECK(std::abs(k1[1] + 1.0) < 1e-12);
  // Frozen by the networkx/numpy oracle.
  const double p3[] = {1.931851652578, 1.0, 0.517638090205, -0.517638090205, -1.0, -1.931851652578};
  const auto got = corona_spectrum(float_spectrum(adjacency_matrix(path_graph(3))));
  REQUIRE(got.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(got[i] - p3[i]) < 1e-9);
  const double c4[] = {2.414213562373, 1.0,  1.0,  0.414213562373, -0.414213562373,
                       -1.0,           -1.0, -2.414213562373};
  const auto got4 = float_spectrum(adjacency_matrix(corona(cycle_graph(4))));
  for (int i = 0; i < 8; ++i) CHECK(std::abs(got4[i] - c4[i]) < 1e-9);
}

TEST_CASE("minimum-degree-two family") {
  const Graph k2 = min_deg2_graph(2);
  CHECK(k2.order() == 8);
  CHECK(is_chemical(k2));
  CHECK(min_degree(k2) == 2);
  CHECK(are_isomorphic(min_deg2_graph(4), fixture("fig4_k4_base")));
  CHECK_THROWS_AS(min_deg2_graph(1), DomainError);
  for (int k = 2; k <= 5; ++k) CHECK(witness_holds({Family::kMinDeg2, k, {}, {}}));
}

TEST_CASE("large-minimum-degree family") {
  const Graph k3 = large_min_deg_graph(3);
  CHECK(k3.order() == 6);
  CHECK_FALSE(is_bipartite(k3));
  CHECK(is_conduction_isomorphic(k3));
  const Graph k4 = large_min_deg_graph(4);
  CHECK(k4.order() == 8);
  CHECK(min_degree(k4) == 3);
  CHECK_THROWS_AS(large_min_deg_graph(2), DomainError);
  for (int k = 3; k <= 6; ++k) CHECK(witness_holds({Family::kLargeMinDeg, k, {}, {}}));
}

TEST_CASE("canonical double covers") {
  const Graph rad = fixture("radialene3");
  const Graph cdc = canonical_double_cover(rad);
  CHECK(cdc.order() == 12);
  CHECK(cdc.edge_count() == 12);
  CHECK(is_connected(cdc));
  CHECK(is_bipartite(cdc));
  CHECK(is_conduction_isomorphic(cdc));
  CHECK_FALSE(is_connected(canonical_double_cover(cycle_graph(4))));
  CHECK(witness_holds({Family::kCdc, 0, rad, {}}));
}

TEST_CASE("appendix family") {
  CHECK(appendix_family_graph(3).order() == 8);
  CHECK(appendix_family_graph(4).order() == 12);
  CHECK_THROWS_AS(appendix_family_graph(2), DomainError);
  for (int k = 3; k <= 6; ++k) CHECK(witness_holds({Family::kAppendix, k, {}, {}}));
}

TEST_CASE("corona witness swaps the halves") {
  CHECK(witness_holds({Family::kComb, 5, {}, {}}));
  CHECK(witness_holds({Family::kRadialene, 6, {}, {}}));
  CHECK(witness_holds({Family::kCorona, 2, complete_graph(4), {}}));
  CHECK(witness_holds({Family::kCorona, 1, fixture("paw"), {}}));
}

TEST_CASE("family names") {
  for (Family f : {Family::kCorona, Family::kComb, Family::kRadialene, Family::kMinDeg2,
                   Family::kLargeMinDeg, Family::kCdc, Family::kAppendix})
    CHECK(family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(family_from_string("petersen"), DomainError);
  CHECK_THROWS_AS(generate({Family::kCorona, 1, std::nullopt, {}}), DomainError);
}
