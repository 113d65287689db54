#pragma once

// Minor containment (deletion, contraction, redirection), the two-graph
// obstruction catalog for Abelian varieties, the structural classifier for
// graphs avoiding it, and the path transformations that carry breaking paths
// along minor operations.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bpe/graph.hpp"
#include "bpe/path.hpp"

namespace bpe {

/// Edits applied in order; each id refers to the graph produced by the edits before it.
struct MinorMatch {
  std::vector<GraphEdit> ops;
};

Graph replay_minor(const Graph& g, std::span<const GraphEdit> ops);

/// Multigraph isomorphism. With `directed` false, edge directions are ignored.
bool isomorphic(const Graph& a, const Graph& b, bool directed);

/// Whether h (up to redirection) is a minor of g. The witness replays to a
/// graph isomorphic to h including edge directions. Throws BudgetError when
/// |E(g)| exceeds Budget::minor_max_edges.
std::optional<MinorMatch> minor_contains(const Graph& g, const Graph& h);

/// THETA3 and DIGONS2.
std::vector<Graph> minor_catalog();
std::string catalog_name(std::size_t index);

struct StructureClass {
  enum class Tag { cycle_with_decorations, at_most_two_vertices, contains_forbidden };
  Tag tag = Tag::cycle_with_decorations;
  std::size_t cycle_length = 0;  // cycle_with_decorations: core length (0 for a tree with loops)
  std::size_t which = 0;         // contains_forbidden: catalog index
  std::optional<MinorMatch> embedding;
};

std::string describe(const StructureClass& s);

/// Loops removed and every bridge contracted.
Graph two_edge_connected_core(const Graph& g);
bool is_tree_with_loops(const Graph& g);

/// Catalog minor if present; otherwise the shape of the core: a cycle (with
/// trees and loops attached), or two vertices joined by ≥ 3 parallel edges.
/// Throws DomainError for disconnected graphs.
StructureClass has_forbidden_minor(const Graph& g);

/// Connected graphs reachable by one edge deletion (keeping each resulting
/// component) or one contraction.
std::vector<Graph> one_step_minors(const Graph& g);

enum class PathTransform {
  plus_e,    // lift a path of g/e back to g
  minus_e,   // drop a loop e from a path of g
  merge_uv,  // drop a bridge e from a path of g, landing in g/e
};

/// plus_e: `p` lives in edit_graph(g, contract e).graph and the result lives in
/// g; the merged vertex is represented by τ e, so every arrival at ι e is
/// followed by e and every departure from ι e is preceded by e⁻¹.
/// minus_e / merge_uv: `p` lives in g and the result in g∖e resp. g/e.
PathWord transform_path(PathTransform kind, const Graph& g, EdgeId e, const PathWord& p);

}  // namespace bpe
