// fixtures.hpp - named graphs used by the tests, the acceptance run and the
// `fixture` subcommand.
#pragma once

#include "condgraph/graph.hpp"

#include <string_view>
#include <vector>

namespace condgraph {

/// Throws DomainError for an unknown name.
Graph fixture(std::string_view name);

std::vector<std::string_view> fixture_names();

/// The nine connected graphs on two to four vertices (plus K1) as drawn in
/// the small-graph gallery, keyed by the same names as fixture().
std::vector<std::string_view> small_gallery_names();

/// Hand-derived conduction graph of a small_gallery_names() entry.
Graph drawn_conduction_graph(std::string_view name);

}  // namespace condgraph
