#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "condgraph/errors.hpp"
#include "condgraph/fixtures.hpp"
#include "condgraph/graph.hpp"
#include "condgraph/graph6.hpp"
#include "support.hpp"

using namespace condgraph;

TEST_CASE("graph6 decodes reference strings") {
  const Graph k2 = from_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6("Ch") == path_graph(4));
  CHECK(testsupport::isomorphic_brute(from_graph6("Cr"), cycle_graph(4)));
  CHECK(to_graph6(path_graph(4)) == "Ch");
  CHECK(to_graph6(k2) == "A_");
  CHECK(to_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 round trip on every labelled graph up to six vertices") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : testsupport::all_labelled(n)) REQUIRE(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 round trip past the one-byte order header") {
  Graph g = cycle_graph(63);
  g.add_edge(0, 31);
  CHECK(to_graph6(g).front() == '~');
  CHECK(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), Graph6Error);
  CHECK_THROWS_AS(from_graph6("C"), Graph6Error);
  CHECK_THROWS_AS(from_graph6("C~~"), Graph6Error);
  CHECK_THROWS_AS(from_graph6("A\x01"), Graph6Error);
}

TEST_CASE("adjacency matrix conventions") {
  const auto k2 = adjacency_matrix(complete_graph(2));
  CHECK(k2(0, 1) == 1);
  CHECK(k2(0, 0) == 0);
  Graph k1(1);
  k1.add_loop(0);
  CHECK(adjacency_matrix(k1)(0, 0) == 2);
  const auto c4 = adjacency_matrix(cycle_graph(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c4(i, j) == ((j - i + 4) % 4 % 2 == 1 ? 1 : 0));
  CHECK(graph_from_adjacency(c4) == cycle_graph(4));
}

TEST_CASE("connectivity, bipartiteness and chemical flags") {
  const Graph c5 = cycle_graph(5);
  CHECK(is_connected(c5));
  CHECK_FALSE(is_bipartite(c5));
  CHECK(is_chemical(c5));
  CHECK_FALSE(is_connected(disjoint_union(complete_graph(2), complete_graph(2))));
  const Graph rad = fixture("radialene3");
  CHECK(is_chemical(rad));
  CHECK_FALSE(is_bipartite(rad));
  CHECK_FALSE(is_chemical(star_graph(4)));
}

TEST_CASE("connectivity and bipartiteness agree with brute force") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testsupport::all_labelled(n)) {
      REQUIRE(is_connected(g) == testsupport::connected_bfs(g));
      REQUIRE(is_bipartite(g) == testsupport::bipartite_brute(g));
    }
  }
}

TEST_CASE("cut vertices are the vertices whose deletion disconnects") {
  for (const Graph& g : testsupport::all_labelled(5)) {
    if (!is_connected(g)) continue;
    VertexSet expect = 0;
    for (int v = 0; v < 5; ++v)
      if (!testsupport::connected_bfs(g.without(bit(v)))) expect |= bit(v);
    REQUIRE(cut_vertices(g) == expect);
  }
}

TEST_CASE("fixtures have the documented shape") {
  const Graph ipso = fixture("ipso15");
  CHECK(ipso.order() == 15);
  CHECK(ipso.edge_count() == 40);
  CHECK(fixture("p4") == path_graph(4));
  CHECK(testsupport::isomorphic_brute(fixture("diamond"), [] {
    Graph d(4);
    for (auto [u, v] : complete_graph(4).edges())
      if (!(u == 2 && v == 3)) d.add_edge(u, v);
    return d;
  }()));
  const Graph reg = fixture("fig6reg24");
  CHECK(reg.order() == 24);
  CHECK(is_regular(reg, 6));
  CHECK_THROWS_AS(fixture("no-such-graph"), DomainError);
}

TEST_CASE("ipso15 offset lists name every edge from both ends") {
  // Residue 1 mod 3 lists six offsets, the other residues five; the lists
  // total 80 = 2 * 40 exactly when each edge is listed twice.
  const Graph g = fixture("ipso15");
  for (int v = 0; v < 15; ++v) REQUIRE(g.degree(v) == (v % 3 == 1 ? 6 : 5));
}
