#include "condgraph/isomorphism.hpp"

#include "condgraph/errors.hpp"
#include "condgraph/graph6.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace condgraph {

namespace {

using Rows = std::array<VertexSet, kMaxOrder>;

struct Partition {
  int n = 0;
  int cells = 0;
  std::array<int, kMaxOrder> lab{};       // vertices in cell order
  std::array<int, kMaxOrder> cell_of{};   // vertex -> start of its cell
  std::array<int, kMaxOrder> len{};       // valid at cell starts
  std::array<VertexSet, kMaxOrder> mask{};  // valid at cell starts
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colours) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbours(v);
    key_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      const int c = colours.empty() ? 0 : colours[v];
      key_[v] = 2 * c + (g.has_loop(v) ? 1 : 0);
    }
  }

  CanonicalLabeling run() {
    CanonicalLabeling out;
    out.position.assign(static_cast<std::size_t>(n_), 0);
    out.orbit.resize(static_cast<std::size_t>(n_));
    if (n_ == 0) return out;

    Partition p = initial_partition();
    std::vector<int> queue;
    for (int s = 0; s < n_; s += p.len[s]) queue.push_back(s);
    refine(p, queue);
    path_.assign(static_cast<std::size_t>(n_), -1);
    search(p, 0);

    for (int i = 0; i < n_; ++i) out.position[best_lab_[i]] = i;
    UnionFind uf(n_);
    for (const auto& a : autos_) {
      for (int v = 0; v < n_; ++v) uf.unite(v, a[v]);
    }
    for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);
    out.generators = std::move(autos_);
    return out;
  }

 private:
  Partition initial_partition() const {
    Partition p;
    p.n = n_;
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key_[a] < key_[b]; });
    for (int i = 0; i < n_; ++i) p.lab[i] = order[i];
    int start = 0;
    for (int i = 1; i <= n_; ++i) {
      if (i == n_ || key_[order[i]] != key_[order[start]]) {
        p.len[start] = i - start;
        VertexSet m = 0;
        for (int j = start; j < i; ++j) {
          p.cell_of[order[j]] = start;
          m |= bit(order[j]);
        }
        p.mask[start] = m;
        ++p.cells;
        start = i;
      }
    }
    return p;
  }

  // Equitable refinement: split every cell by the number of neighbours in
  // the splitter, smaller counts first. Hopcroft's rule decides which new
  // fragments become splitters.
  void refine(Partition& p, std::vector<int>& queue) const {
    std::array<bool, kMaxOrder> queued{};
    for (int s : queue) queued[s] = true;
    std::array<int, kMaxOrder> count{};
    std::array<int, kMaxOrder> tmp{};
    std::size_t head = 0;
    while (head < queue.size() && p.cells < n_) {
      const int w = queue[head++];
      queued[w] = false;
      const VertexSet splitter = p.mask[w];
      for (int start = 0; start < n_;) {
        const int len = p.len[start];
        const int end = start + len;
        if (len == 1) {
          start = end;
          continue;
        }
        bool uniform = true;
        for (int i = start; i < end; ++i) {
          count[p.lab[i]] = std::popcount(adj_[p.lab[i]] & splitter);
          if (count[p.lab[i]] != count[p.lab[start]]) uniform = false;
        }
        if (uniform) {
          start = end;
          continue;
        }
        std::copy(p.lab.begin() + start, p.lab.begin() + end, tmp.begin());
        std::stable_sort(tmp.begin(), tmp.begin() + len,
                         [&](int a, int b) { return count[a] < count[b]; });
        std::copy(tmp.begin(), tmp.begin() + len, p.lab.begin() + start);

        const bool was_queued = queued[start];
        int largest = start;
        int largest_len = 0;
        int fragment = start;
        for (int i = start + 1; i <= end; ++i) {
          if (i == end || count[p.lab[i]] != count[p.lab[fragment]]) {
            const int flen = i - fragment;
            p.len[fragment] = flen;
            VertexSet m = 0;
            for (int j = fragment; j < i; ++j) {
              p.cell_of[p.lab[j]] = fragment;
              m |= bit(p.lab[j]);
            }
            p.mask[fragment] = m;
            if (flen > largest_len) {
              largest_len = flen;
              largest = fragment;
            }
            fragment = i;
          }
        }
        int fragments = 0;
        for (int f = start; f < end; f += p.len[f]) ++fragments;
        p.cells += fragments - 1;
        for (int f = start; f < end; f += p.len[f]) {
          if (queued[f]) continue;
          if (was_queued || f != largest) {
            queued[f] = true;
            queue.push_back(f);
          }
        }
        start = end;
      }
    }
  }

  void individualize(Partition& p, int v) const {
    const int start = p.cell_of[v];
    const int len = p.len[start];
    int at = start;
    while (p.lab[at] != v) ++at;
    std::swap(p.lab[at], p.lab[start]);
    p.len[start] = 1;
    p.mask[start] = bit(v);
    p.len[start + 1] = len - 1;
    VertexSet rest = 0;
    for (int j = start + 1; j < start + len; ++j) {
      p.cell_of[p.lab[j]] = start + 1;
      rest |= bit(p.lab[j]);
    }
    p.mask[start + 1] = rest;
    ++p.cells;
  }

  Rows certificate(const Partition& p) const {
    std::array<int, kMaxOrder> inv{};
    for (int i = 0; i < n_; ++i) inv[p.lab[i]] = i;
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      VertexSet r = 0;
      for_each_vertex(adj_[p.lab[i]], [&](int u) { r |= bit(inv[u]); });
      rows[i] = r;
    }
    return rows;
  }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    int i = 0;
    while (a[i] == b[i]) ++i;
    return i;
  }

  void record_automorphism(const std::array<int, kMaxOrder>& from, const Partition& p) {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) perm[from[i]] = p.lab[i];
    autos_.push_back(std::move(perm));
  }

  void leaf(const Partition& p, int depth) {
    Rows cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path_;
      first_depth_ = best_depth_ = depth;
      return;
    }
    if (compare(cert, first_cert_) == 0) {
      record_automorphism(first_lab_, p);
      jump_ = divergence(path_, first_path_);
      return;
    }
    const int c = compare(cert, best_cert_);
    if (c == 0) {
      record_automorphism(best_lab_, p);
      jump_ = divergence(path_, best_path_);
    } else if (c > 0) {
      best_cert_ = cert;
      best_lab_ = p.lab;
      best_path_ = path_;
      best_depth_ = depth;
    }
  }

  void search(const Partition& p, int depth) {
    if (p.cells == n_) {
      leaf(p, depth);
      return;
    }
    int target = 0;
    while (p.len[target] == 1) target += 1;
    std::vector<int> cell(p.lab.begin() + target, p.lab.begin() + target + p.len[target]);
    std::sort(cell.begin(), cell.end());

    std::vector<int> tried;
    std::size_t autos_seen = 0;
    UnionFind orbits(n_);
    for (int v : cell) {
      if (autos_seen < autos_.size()) {
        for (; autos_seen < autos_.size(); ++autos_seen) {
          const auto& a = autos_[autos_seen];
          bool fixes_prefix = true;
          for (int d = 0; d < depth && fixes_prefix; ++d) fixes_prefix = a[path_[d]] == path_[d];
          if (!fixes_prefix) continue;
          for (int x = 0; x < n_; ++x) orbits.unite(x, a[x]);
        }
      }
      const int ov = orbits.find(v);
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return orbits.find(t) == ov; })) {
        continue;
      }
      tried.push_back(v);

      Partition child = p;
      individualize(child, v);
      std::vector<int> queue{child.cell_of[v]};
      refine(child, queue);
      path_[depth] = v;
      search(child, depth + 1);
      path_[depth] = -1;
      if (jump_ >= 0) {
        if (jump_ < depth) return;
        jump_ = -1;
      }
    }
  }

  int n_;
  std::array<VertexSet, kMaxOrder> adj_{};
  std::vector<int> key_;

  std::vector<int> path_;
  bool have_first_ = false;
  Rows first_cert_{};
  Rows best_cert_{};
  std::array<int, kMaxOrder> first_lab_{};
  std::array<int, kMaxOrder> best_lab_{};
  std::vector<int> first_path_;
  std::vector<int> best_path_;
  int first_depth_ = 0;
  int best_depth_ = 0;
  int jump_ = -1;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours) {
  if (!colours.empty() && static_cast<int>(colours.size()) != g.order()) {
    throw DomainError("colour vector length does not match graph order");
  }
  CanonicalLabeling out = Canonizer(g, colours).run();
  out.canonical = g.permuted(out.position);
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  Graph simple(g.order());
  for (auto [u, v] : lab.canonical.edges()) simple.add_edge(u, v);
  return CanonicalForm{to_graph6(simple), lab.canonical.loops()};
}

bool is_isomorphism(const Graph& from, const Graph& to, const std::vector<int>& h) {
  const int n = from.order();
  if (to.order() != n || static_cast<int>(h.size()) != n) return false;
  VertexSet image = 0;
  for (int v : h) {
    if (v < 0 || v >= n) return false;
    image |= bit(v);
  }
  if (image != from.vertices()) return false;
  for (int u = 0; u < n; ++u) {
    if (from.has_loop(u) != to.has_loop(h[u])) return false;
    VertexSet mapped = 0;
    for_each_vertex(from.neighbours(u), [&](int v) { mapped |= bit(h[v]); });
    if (mapped != to.neighbours(h[u])) return false;
  }
  return true;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count() ||
      a.loop_count() != b.loop_count() || degree_sequence(a) != degree_sequence(b)) {
    return std::nullopt;
  }
  const CanonicalLabeling la = canonical_labeling(a);
  const CanonicalLabeling lb = canonical_labeling(b);
  if (!(la.canonical == lb.canonical)) return std::nullopt;
  std::vector<int> from_position(static_cast<std::size_t>(b.order()));
  for (int v = 0; v < b.order(); ++v) from_position[lb.position[v]] = v;
  std::vector<int> h(static_cast<std::size_t>(a.order()));
  for (int v = 0; v < a.order(); ++v) h[v] = from_position[la.position[v]];
  if (!is_isomorphism(a, b, h)) {
    throw ConsistencyError("canonical labelling produced a non-isomorphism");
  }
  return h;
}

}  // namespace condgraph
