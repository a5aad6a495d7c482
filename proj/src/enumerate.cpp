#include "condgraph/enumerate.hpp"

#include "condgraph/errors.hpp"
#include "condgraph/isomorphism.hpp"

#include <unordered_set>

namespace condgraph {

namespace {

VertexSet apply(const std::vector<int>& perm, VertexSet s) {
  VertexSet out = 0;
  for_each_vertex(s, [&](int v) { out |= bit(perm[v]); });
  return out;
}

class Generator {
 public:
  Generator(int n, const GenerationOptions& options, const std::function<void(const Graph&)>& emit)
      : n_(n), opt_(options), emit_(emit) {
    if (opt_.regular_degree > 0 && (opt_.max_degree == 0 || opt_.max_degree > opt_.regular_degree)) {
      opt_.max_degree = opt_.regular_degree;
    }
  }

  void run() {
    const Graph k1(1);
    visit(k1, nullptr);
  }

 private:
  bool owned(const Graph& g) const {
    if (opt_.shard_count <= 1) return true;
    if (g.order() != opt_.split_order) return true;
    const std::string key = canonical_form(g).graph6;
    return static_cast<int>(fnv1a(key) % static_cast<std::uint64_t>(opt_.shard_count)) ==
           opt_.shard_index;
  }

  bool feasible(const Graph& g) const {
    if (opt_.regular_degree <= 0) return true;
    const int r = opt_.regular_degree;
    int deficit = 0;
    for (int v = 0; v < g.order(); ++v) deficit += r - g.degree(v);
    return deficit <= r * (n_ - g.order());
  }

  void deliver(const Graph& g) {
    if (opt_.regular_degree > 0 && !is_regular(g, opt_.regular_degree)) return;
    // Below the split order every shard would see the graph; only shard 0
    // reports it.
    if (opt_.shard_count > 1 && n_ < opt_.split_order && opt_.shard_index != 0) return;
    emit_(g);
  }

  // `labeling` is the graph's canonical labelling when already known.
  void visit(const Graph& g, const CanonicalLabeling* labeling) {
    if (!owned(g)) return;
    if (g.order() == n_) {
      deliver(g);
      return;
    }
    CanonicalLabeling own;
    if (labeling == nullptr) {
      own = canonical_labeling(g);
      labeling = &own;
    }
    const std::vector<std::vector<int>> generators = labeling->generators;
    const int m = g.order();

    VertexSet open = g.vertices();
    if (opt_.max_degree > 0) {
      open = 0;
      for (int v = 0; v < m; ++v) {
        if (g.degree(v) < opt_.max_degree) open |= bit(v);
      }
    }
    std::unordered_set<VertexSet> seen;
    // Submasks of `open` in increasing order.
    for (VertexSet s = open & (~open + 1); s != 0; s = (s - open) & open) {
      if (opt_.max_degree > 0 && std::popcount(s) > opt_.max_degree) continue;
      if (!generators.empty()) {
        if (seen.contains(s)) continue;
        std::vector<VertexSet> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
          const VertexSet x = stack.back();
          stack.pop_back();
          for (const auto& perm : generators) {
            const VertexSet y = apply(perm, x);
            if (seen.insert(y).second) stack.push_back(y);
          }
        }
      }
      Graph child = disjoint_union(g, Graph(1));
      for_each_vertex(s, [&](int v) { child.add_edge(v, m); });
      if (!feasible(child)) continue;
      CanonicalLabeling child_labeling;
      bool have_labeling = false;
      if (!accept(child, child_labeling, have_labeling)) continue;
      visit(child, have_labeling ? &child_labeling : nullptr);
    }
  }

  // Canonical deletion: among non-cut vertices with the smallest invariant
  // key, the one placed last by the canonical labelling. The child is kept
  // when the new vertex lies in that vertex's orbit.
  bool accept(const Graph& g, CanonicalLabeling& labeling, bool& have_labeling) const {
    const int last = g.order() - 1;
    const VertexSet candidates = g.vertices() & ~cut_vertices(g);
    std::vector<long> key(static_cast<std::size_t>(g.order()), 0);
    long best = -1;
    for_each_vertex(candidates, [&](int v) {
      long nbr = 0;
      for_each_vertex(g.neighbours(v), [&](int u) { nbr += g.degree(u); });
      key[v] = static_cast<long>(g.degree(v)) * 4096 + nbr;
      if (best < 0 || key[v] < best) best = key[v];
    });
    if (key[last] != best) return false;
    VertexSet minimal = 0;
    for_each_vertex(candidates, [&](int v) {
      if (key[v] == best) minimal |= bit(v);
    });
    if (minimal == bit(last)) return true;

    labeling = canonical_labeling(g);
    have_labeling = true;
    int chosen = -1;
    for_each_vertex(minimal, [&](int v) {
      if (chosen < 0 || labeling.position[v] > labeling.position[chosen]) chosen = v;
    });
    return labeling.orbit[chosen] == labeling.orbit[last];
  }

  int n_;
  GenerationOptions opt_;
  const std::function<void(const Graph&)>& emit_;
};

std::vector<Graph> collect(int n, const GenerationOptions& options) {
  std::vector<Graph> out;
  generate_connected(n, options, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void generate_connected(int n, const GenerationOptions& options,
                        const std::function<void(const Graph&)>& emit) {
  if (n < 1 || n > kMaxOrder) throw DomainError("order out of range");
  if (options.shard_count < 1 || options.shard_index < 0 || options.shard_index >= options.shard_count) {
    throw DomainError("bad shard selection");
  }
  Generator(n, options, emit).run();
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 10) throw DomainError("built-in connected enumeration covers 1 <= n <= 10");
  return collect(n, {});
}

std::vector<Graph> enumerate_chemical(int n) {
  if (n < 1 || n > 16) throw DomainError("built-in chemical enumeration covers 1 <= n <= 16");
  GenerationOptions opt;
  opt.max_degree = 3;
  return collect(n, opt);
}

std::vector<Graph> enumerate_cubic(int n) {
  if (n < 4 || n > 16 || n % 2 != 0) throw DomainError("cubic enumeration covers even 4 <= n <= 16");
  GenerationOptions opt;
  opt.regular_degree = 3;
  return collect(n, opt);
}

}  // namespace condgraph
