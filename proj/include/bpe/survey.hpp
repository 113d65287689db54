#pragma once

// Exhaustive survey of small connected multigraphs (loops allowed): decide
// every graph for a list of varieties, compare with the structural
// classification, and mine the minor-minimal breaking graphs.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bpe/graph.hpp"
#include "bpe/minors.hpp"
#include "bpe/variety.hpp"

namespace bpe {

/// Isomorphism-invariant code ignoring edge directions, e.g. "3|0-0,0-1,1-2".
std::string canonical_code(const Graph& g);

/// The graph a code denotes: vertices "0".., edges "e0".. directed low → high.
Graph graph_from_code(const std::string& code);

/// One representative per isomorphism class, ordered by (vertices, edges, code).
std::vector<Graph> enumerate_connected_multigraphs(std::size_t max_vertices, std::size_t max_edges);

struct SurveyRecord {
  std::string code;
  Graph graph;
  std::vector<bool> breaking;  // per variety
  StructureClass structure;
  bool tree_with_loops = false;
  bool agrees = true;  // every variety matches its structural prediction
};

struct SurveyReport {
  std::size_t max_vertices = 0;
  std::size_t max_edges = 0;
  std::vector<VarietySpec> varieties;
  std::vector<SurveyRecord> records;
  std::vector<std::vector<std::string>> minimal_breaking;  // per variety, canonical codes
  std::size_t disagreements = 0;
};

/// Abelian varieties are predicted to break exactly when a catalog minor is
/// present, the trivial variety exactly when the graph is not a tree with
/// loops. Throws BudgetError beyond Budget::survey_max_vertices / _edges.
SurveyReport run_survey(std::size_t max_vertices, std::size_t max_edges,
                        const std::vector<VarietySpec>& varieties,
                        const std::function<void(std::size_t done, std::size_t total)>& progress = {});

}  // namespace bpe
