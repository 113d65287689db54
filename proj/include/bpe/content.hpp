#pragma once

// Level-zero content subgraphs of an arrow: the intersection C0 of the
// subgraphs spanned by all walks with the arrow's value, its component P0 at
// the source, the cheaper Abelian content Ĉ0, and a bounded-enumeration oracle.

#include <cstddef>

#include "bpe/graph.hpp"
#include "bpe/variety.hpp"

namespace bpe {

struct ContentReport {
  Subgraph c0;
  Subgraph c0_hat;
  Subgraph p0;
  ArrowValue arrow;
};

/// Support edges with their endpoints, plus the source vertex. Abelian varieties only.
Subgraph ab_content(const Graph& g, const ArrowValue& x);

/// Exact C0: an atom is kept iff no walk with value x avoids it.
Subgraph c0_exact(const Graph& g, const ArrowValue& x);

/// Component of c0_exact at the source.
Subgraph p0(const Graph& g, const ArrowValue& x);

ContentReport content_report(const Graph& g, const ArrowValue& x);

/// Intersection of spanned subgraphs over every walk of length ≤ max_len with
/// value x, by explicit enumeration of reachable (vertex, value) states.
/// Guarded to |E| ≤ 6 and max_len ≤ 12; throws DomainError if no walk within
/// the bound realizes x.
Subgraph c0_oracle(const Graph& g, const ArrowValue& x, std::size_t max_len);

/// True iff a walk of length ≤ max_len inside `allowed` has value x. Same
/// enumeration as c0_oracle, exposed for cross-checking realizable_in.
bool bounded_walk_exists(const Graph& g, const Subgraph& allowed, const ArrowValue& x,
                         std::size_t max_len);

}  // namespace bpe
