#include "condgraph/fixtures.hpp"

#include "condgraph/errors.hpp"

#include <array>
#include <string>

namespace condgraph {

namespace {

struct OffsetClass {
  int residue;
  std::vector<int> offsets;
};

// Vertex labels 1..n taken mod n; vertex i is joined to i + o for each
// offset o of its residue class mod `modulus`.
Graph offset_rule_graph(int n, int modulus, const std::vector<OffsetClass>& classes) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (const auto& cls : classes) {
      if (i % modulus != cls.residue) continue;
      for (int o : cls.offsets) {
        const int a = i % n;
        const int b = (i + o) % n;
        if (g.has_edge(a, b)) continue;
        g.add_edge(a, b);
      }
    }
  }
  // Each edge must be listed from both ends.
  for (int i = 1; i <= n; ++i) {
    int listed = 0;
    for (const auto& cls : classes) {
      if (i % modulus == cls.residue) listed = static_cast<int>(cls.offsets.size());
    }
    if (g.degree(i % n) != listed) throw ConsistencyError("offset rule is not symmetric");
  }
  return g;
}

Graph ipso15() {
  return offset_rule_graph(15, 3,
                           {{1, {1, 4, 6, 9, 11, 14}}, {2, {1, 3, 11, 12, 14}}, {0, {1, 3, 4, 12, 14}}});
}

Graph fig6reg24() {
  return offset_rule_graph(24, 8,
                           {{1, {1, 3, 5, 7, 17, 23}},
                            {2, {1, 3, 7, 9, 11, 23}},
                            {3, {1, 3, 11, 15, 21, 23}},
                            {4, {1, 3, 17, 19, 21, 23}},
                            {5, {1, 7, 13, 19, 21, 23}},
                            {6, {1, 13, 17, 19, 21, 23}},
                            {7, {1, 5, 7, 17, 21, 23}},
                            {0, {1, 3, 5, 7, 17, 23}}});
}

// Two vertical paths of `left` and `right` vertices drawn from row 1, joined
// by rungs at the listed rows. Left column is 0..left-1, right column follows.
Graph two_column_graph(int left, int right, std::initializer_list<int> rung_rows) {
  Graph g(left + right);
  for (int i = 0; i + 1 < left; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i + 1 < right; ++i) g.add_edge(left + i, left + i + 1);
  for (int row : rung_rows) g.add_edge(row - 1, left + row - 1);
  return g;
}

// Inner 8-cycle 0..7, outer vertices 8..15 matched in pairs (9,10), (11,12),
// (13,14), (15,8), spoke from inner i to outer 8+i.
Graph fig4_k4_base() {
  Graph g(16);
  for (int i = 0; i < 8; ++i) {
    g.add_edge(i, (i + 1) % 8);
    g.add_edge(i, 8 + i);
  }
  for (int i = 1; i < 8; i += 2) g.add_edge(8 + i, 8 + (i + 1) % 8);
  return g;
}

Graph radialene3() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph comb3() { return Graph(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph with_loops(Graph g, std::initializer_list<int> loops) {
  for (int v : loops) g.add_loop(v);
  return g;
}

}  // namespace

Graph fixture(std::string_view name) {
  if (name == "k1") return Graph(1);
  if (name == "p2") return path_graph(2);
  if (name == "p3") return path_graph(3);
  if (name == "p4") return path_graph(4);
  if (name == "c3") return cycle_graph(3);
  if (name == "c4") return cycle_graph(4);
  if (name == "k4") return complete_graph(4);
  if (name == "diamond") return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  if (name == "star3") return star_graph(3);
  if (name == "paw") return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  if (name == "ipso15") return ipso15();
  if (name == "ladder_l3") return two_column_graph(3, 3, {1, 2, 3});
  if (name == "e8") return two_column_graph(5, 3, {2, 3});
  if (name == "ladder5_partial") return two_column_graph(5, 5, {2, 3, 4});
  if (name == "radialene3") return radialene3();
  if (name == "comb3") return comb3();
  if (name == "fig4_k4_base") return fig4_k4_base();
  if (name == "fig6reg24") return fig6reg24();
  throw DomainError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string_view> fixture_names() {
  return {"k1",       "p2",        "p3", "p4",  "c3",     "c4",         "k4",
          "diamond",  "star3",     "paw", "ipso15", "ladder_l3", "e8",
          "ladder5_partial", "radialene3", "comb3", "fig4_k4_base", "fig6reg24"};
}

std::vector<std::string_view> small_gallery_names() {
  return {"k1", "p2", "p3", "c3", "p4", "star3", "c4", "paw", "diamond", "k4"};
}

Graph drawn_conduction_graph(std::string_view name) {
  if (name == "k1") return with_loops(Graph(1), {0});
  if (name == "p2") return path_graph(2);
  if (name == "p3") return with_loops(Graph(3, {{0, 2}}), {0, 2});
  if (name == "c3") return with_loops(cycle_graph(3), {0, 1, 2});
  if (name == "p4") return path_graph(4);
  if (name == "star3") return with_loops(Graph(4), {1, 2, 3});
  if (name == "c4" || name == "diamond") return with_loops(Graph(4, {{0, 1}, {2, 3}}), {0, 1, 2, 3});
  // Triangle on the pendant and the two degree-2 vertices, loop on the
  // pendant, and the degree-3 vertex hanging off the pendant.
  if (name == "paw") return with_loops(Graph(4, {{0, 3}, {1, 2}, {1, 3}, {2, 3}}), {3});
  if (name == "k4") return with_loops(complete_graph(4), {0, 1, 2, 3});
  throw DomainError("no drawn conduction graph for '" + std::string(name) + "'");
}

}  // namespace condgraph
