// enumerate.hpp - one representative per isomorphism class of connected
// graphs, by canonical augmentation: each graph grows by a vertex joined to
// one subset per automorphism orbit, and a child is kept only when the new
// vertex is (up to automorphism) its canonically chosen non-cut vertex.
#pragma once

#include "condgraph/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace condgraph {

struct GenerationOptions {
  /// 0 means unbounded.
  int max_degree = 0;
  /// When positive, only graphs regular of this degree are emitted, and
  /// branches that cannot reach one are cut.
  int regular_degree = 0;
  /// Partitioning: the subtree under each graph of order `split_order` is
  /// owned by shard (hash of its canonical graph6) % shard_count. Graphs
  /// below that order are emitted by shard 0 only.
  int split_order = 0;
  int shard_count = 1;
  int shard_index = 0;
};

/// Stream every connected graph of order n satisfying the options.
void generate_connected(int n, const GenerationOptions& options,
                        const std::function<void(const Graph&)>& emit);

/// 1 <= n <= 10.
std::vector<Graph> enumerate_connected(int n);

/// Connected, maximum degree at most 3; 1 <= n <= 16.
std::vector<Graph> enumerate_chemical(int n);

/// Connected 3-regular graphs; n even, 4 <= n <= 16.
std::vector<Graph> enumerate_cubic(int n);

/// 64-bit FNV-1a, used for shard assignment and manifest checksums.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace condgraph
