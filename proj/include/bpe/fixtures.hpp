#pragma once

// Named small graphs used by tests, the CLI and the minor catalog.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpe/graph.hpp"

namespace bpe::fixtures {

/// Triangle u, v, w with a doubled u–v side: a, b: u→v, c: w→u, d: v→w.
Graph theta3();
/// Two digons sharing u: a, b: u→v, c, d: w→u.
Graph digons2();
/// e: 0→1 followed by the 2-cycle f: 1→2, g: 2→1; e is a bridge.
Graph bridgecyc();
/// a, b: 0→1.
Graph digon();
/// One vertex with one loop l.
Graph loop1();
/// Directed n-cycle on 0..n−1 with edges e<i><i+1>; n = 2 gives a: 0→1, b: 1→0.
Graph cycle(std::size_t n);
/// Directed path 0→1→…→n−1.
Graph path(std::size_t n);
/// cycle(n) with a pendant path of two edges hanging off vertex 0, a loop at
/// the end of that path and a loop on cycle vertex 0.
Graph decorated_cycle(std::size_t n);
/// Two vertices joined by `count` parallel edges, the first `reversed` of them 1→0.
Graph parallel_edges(std::size_t count, std::size_t reversed = 0);

/// Looks up THETA3, DIGONS2, BRIDGECYC, DIGON, LOOP1, C<n>, P<n>, DECC<n>.
std::optional<Graph> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace bpe::fixtures
