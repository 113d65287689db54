#pragma once

// Walks in the doubled graph: words over E ∪ E⁻¹ anchored at a start vertex.
// Words are never reduced; e e⁻¹ is kept as written.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bpe/graph.hpp"

namespace bpe {

struct Step {
  EdgeId edge;
  std::int8_t sign = 1;  // +1 traverses the edge, -1 its formal inverse

  friend bool operator==(const Step&, const Step&) = default;
};

/// Tail and head of a step as traversed.
VertexId step_source(const Graph& g, const Step& s);
VertexId step_target(const Graph& g, const Step& s);

class PathWord {
 public:
  /// Empty path at `v`.
  static PathWord empty_at(VertexId v) { return PathWord(v, v, {}); }

  VertexId start() const { return start_; }
  VertexId end() const { return end_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  friend PathWord parse_path(const Graph&, VertexId, std::vector<Step>);
  friend PathWord inverse_path(const PathWord&);
  friend PathWord concat_paths(const PathWord&, const PathWord&);
  PathWord(VertexId start, VertexId end, std::vector<Step> steps)
      : start_(start), end_(end), steps_(std::move(steps)) {}

  VertexId start_;
  VertexId end_;
  std::vector<Step> steps_;
};

/// Validates consecutiveness; throws ValidityError naming the first bad step (1-based).
PathWord parse_path(const Graph& g, VertexId start, std::vector<Step> steps);

PathWord inverse_path(const PathWord& p);
/// Throws CompositionError unless p.end() == q.start().
PathWord concat_paths(const PathWord& p, const PathWord& q);

/// Vertices visited plus every edge occurring in either direction.
Subgraph spanned_subgraph(const Graph& g, const PathWord& p);

/// Text form: whitespace-separated edge names, a trailing ' marks an inverse.
PathWord parse_path_text(const Graph& g, VertexId start, std::string_view text);
std::string format_path(const Graph& g, const PathWord& p);

}  // namespace bpe
