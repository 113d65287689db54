#pragma once

#include <optional>
#include <string>

#include "bpe/graph.hpp"

namespace bpe {

/// Graphviz source; highlighted vertices and edges are drawn in red.
std::string to_dot(const Graph& g, const std::optional<Subgraph>& highlight = std::nullopt);

/// "u,v;a,b" → subgraph of g (either side may be empty). Throws DomainError on unknown names.
Subgraph parse_subgraph(const Graph& g, const std::string& text);

}  // namespace bpe
