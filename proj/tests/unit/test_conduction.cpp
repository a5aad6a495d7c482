#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "condgraph/conduction.hpp"
#include "condgraph/enumerate.hpp"
#include "condgraph/errors.hpp"
#include "condgraph/fixtures.hpp"
#include "condgraph/isomorphism.hpp"
#include "condgraph/polynomial.hpp"
#include "support.hpp"

using namespace condgraph;

namespace {

struct Expected {
  const char* name;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
};

// Computed by tests/oracle/freeze_values.py from the transmission formula.
const std::vector<Expected> kOracle = {
    {"k1", {}, {0}},
    {"p2", {{0, 1}}, {}},
    {"p3", {{0, 2}}, {0, 2}},
    {"c3", {{0, 1}, {0, 2}, {1, 2}}, {0, 1, 2}},
    {"p4", {{0, 1}, {0, 3}, {2, 3}}, {}},
    {"star3", {}, {1, 2, 3}},
    {"c4", {{0, 2}, {1, 3}}, {0, 1, 2, 3}},
    {"paw", {{0, 3}, {1, 2}, {1, 3}, {2, 3}}, {3}},
    {"diamond", {{0, 1}, {2, 3}}, {0, 1, 2, 3}},
    {"k4", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0, 1, 2, 3}},
};

Graph build(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& loops) {
  Graph g(n, edges);
  for (int v : loops) g.add_loop(v);
  return g;
}

}  // namespace

TEST_CASE("nullity signatures") {
  const Graph k2 = complete_graph(2);
  CHECK(nullity_signature(k2, 0, 1) == NullitySignature{0, 1, 1, 0});
  CHECK(nullity_signature(path_graph(3), 0, 2) == NullitySignature{1, 0, 0, 1});
  const NullitySignature c4 = nullity_signature(cycle_graph(4), 0, 0);
  CHECK(c4 == NullitySignature{2, 1, 1, std::nullopt});
  CHECK(c4.ipso());
}

TEST_CASE("selection-rule table") {
  CHECK(match_rule({3, 2, 2, 1}) == SelectionRule::kDownDownDown2);
  CHECK(rule_answer(SelectionRule::kDownDownDown2) == false);
  CHECK(match_rule({1, 1, 1, std::nullopt}) == SelectionRule::kIpsoSame);
  CHECK(rule_answer(SelectionRule::kIpsoSame) == true);
  CHECK(match_rule({1, 2, 2, std::nullopt}) == SelectionRule::kIpsoUp);
  CHECK(match_rule({1, 0, 0, std::nullopt}) == SelectionRule::kIpsoDown);
  // Offsets are read with the larger single-deletion offset first.
  CHECK(match_rule({1, 1, 2, 2}) == SelectionRule::kUpSameUp);
  CHECK(match_rule({1, 2, 1, 2}) == SelectionRule::kUpSameUp);
  CHECK(match_rule({0, 0, 0, 0}) == SelectionRule::kSameSameSame);
  CHECK_FALSE(rule_answer(SelectionRule::kSameSameSame).has_value());
  const std::pair<NullitySignature, bool> rows[] = {
      {{1, 2, 2, 3}, false}, {{1, 2, 2, 1}, true},  {{1, 2, 1, 2}, false}, {{1, 2, 1, 1}, true},
      {{1, 2, 0, 1}, false}, {{1, 1, 1, 2}, true},  {{1, 1, 0, 0}, false}, {{1, 0, 0, 1}, true},
      {{1, 0, 0, 0}, true},  {{2, 1, 1, 0}, false},
  };
  for (const auto& [sig, answer] : rows) CHECK(rule_answer(match_rule(sig)) == answer);
  CHECK_THROWS_AS(match_rule({0, 1, 1, 1}), ConsistencyError);
  CHECK_THROWS_AS(match_rule({2, 0, 2, 2}), ConsistencyError);
}

TEST_CASE("booleanise") {
  RationalMatrix m(2, 2);
  m << Rational(1, 2), 0, 0, -2;
  const auto b = booleanise(m);
  CHECK(b(0, 0) == 2);
  CHECK(b(1, 1) == 2);
  CHECK(b(0, 1) == 0);
  CHECK(booleanise(inverse(adjacency_matrix(complete_graph(2)))) == adjacency_matrix(complete_graph(2)));
  CHECK(booleanise(inverse(adjacency_matrix(path_graph(4)))) ==
        adjacency_matrix(build(4, {{0, 1}, {0, 3}, {2, 3}}, {})));
  Matrix<int> skew(2, 2);
  skew << 0, 1, 2, 0;
  CHECK_THROWS_AS(booleanise(skew), DomainError);
}

TEST_CASE("conduction graphs of the small gallery match the oracle") {
  for (const Expected& e : kOracle) {
    CAPTURE(e.name);
    const Graph g = fixture(e.name);
    const Graph expect = build(g.order(), e.edges, e.loops);
    CHECK(conduction_graph(g).graph == expect);
    CHECK(conduction_graph(g, ConductionMethod::kSelectionRules).graph == expect);
    CHECK(are_isomorphic(drawn_conduction_graph(e.name), expect));
  }
}

TEST_CASE("named conduction graphs") {
  const Graph c4 = conduction_graph(cycle_graph(4)).graph;
  const Graph two_looped_k2 = build(4, {{0, 1}, {2, 3}}, {0, 1, 2, 3});
  CHECK(are_isomorphic(c4, two_looped_k2));
  CHECK(are_isomorphic(conduction_graph(fixture("diamond")).graph, c4));
  CHECK(conduction_graph(complete_graph(2)).graph == complete_graph(2));
  // Oracle: C6 conducts exactly between odd-distance pairs, no loops.
  Graph c6(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if ((v - u) % 2 == 1) c6.add_edge(u, v);
  CHECK(conduction_graph(cycle_graph(6)).graph == c6);
}

TEST_CASE("nullity-one block form") {
  const Nullity1Blocks p3 = conduction_graph_nullity1_blocks(path_graph(3));
  CHECK(p3.core == (bit(0) | bit(2)));
  CHECK((p3.middle | p3.upper) == bit(1));
  CHECK(p3.conduction.graph == build(3, {{0, 2}}, {0, 2}));
  CHECK_THROWS_AS(conduction_graph_nullity1_blocks(complete_graph(2)), DomainError);
}

TEST_CASE("automatic and selection-rule conduction graphs agree up to 7 vertices") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const ConductionGraph a = conduction_graph(g);
      const ConductionGraph r = conduction_graph(g, ConductionMethod::kSelectionRules);
      REQUIRE(a.graph == r.graph);
      for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
          REQUIRE(r.verdict(u, v).conducts == r.verdict(v, u).conducts);
          REQUIRE(device_verdict(g, v, u).conducts == r.verdict(u, v).conducts);
        }
      }
    }
  }
}

TEST_CASE("nonsingular graphs conduct exactly on the support of the inverse") {
  for (int n = 2; n <= 7; n += 1) {
    for (const Graph& g : enumerate_connected(n)) {
      const auto a = adjacency_matrix(g);
      if (nullity(a) != 0) continue;
      REQUIRE(adjacency_matrix(conduction_graph(g, ConductionMethod::kSelectionRules).graph) ==
              booleanise(inverse(a)));
    }
  }
}

TEST_CASE("the Jacobi numerator is a perfect square") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const IntPolynomial s = char_poly(adjacency_matrix(g));
      for (int l = 0; l < n; ++l) {
        for (int r = l + 1; r < n; ++r) {
          const IntPolynomial t = char_poly(adjacency_matrix(g.without(bit(l))));
          const IntPolynomial u = char_poly(adjacency_matrix(g.without(bit(r))));
          const IntPolynomial v = char_poly(adjacency_matrix(g.without(bit(l) | bit(r))));
          const IntPolynomial jsq = jacobi_numerator(s, t, u, v);
          REQUIRE(!jsq.is_zero());
          const auto j = exact_sqrt(jsq);
          REQUIRE(j.has_value());
          REQUIRE(*j * *j == jsq);
        }
      }
    }
  }
}

TEST_CASE("equal-nullity j-test agrees with the eigenvector sum up to 8 vertices") {
  long decided = 0;
  long conducting = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const ConductionGraph r = conduction_graph(g, ConductionMethod::kSelectionRules);
      Eigen::MatrixXd pinv;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          const DeviceVerdict& d = r.verdict(u, v);
          if (d.rule != SelectionRule::kEqualNullityJTest) continue;
          if (pinv.size() == 0) pinv = testsupport::pseudo_inverse(g);
          const bool ja_nonzero = std::abs(pinv(u, v)) > 1e-6;
          CAPTURE(n);
          CAPTURE(u);
          CAPTURE(v);
          REQUIRE(d.conducts == ja_nonzero);
          ++decided;
          conducting += d.conducts ? 1 : 0;
        }
      }
    }
  }
  MESSAGE("equal-nullity devices checked: " << decided << ", conducting: " << conducting);
  CHECK(decided > 0);
  CHECK(conducting > 0);
  CHECK(conducting < decided);
}
