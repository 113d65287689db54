#pragma once

// Generators and brute-force oracles shared by the test binaries. The oracles
// avoid the library's own search code so they can cross-check it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "bpe/fixpoint.hpp"
#include "bpe/graph.hpp"
#include "bpe/path.hpp"
#include "bpe/variety.hpp"

namespace bpe::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

/// Connected multigraph: a random spanning tree plus extra edges and loops, random directions.
inline Graph random_connected_graph(Rng& rng, std::size_t vertices, std::size_t edges) {
  std::vector<Edge> out;
  auto add = [&](std::uint32_t a, std::uint32_t b) {
    if (pick(rng, 2)) std::swap(a, b);
    out.push_back({VertexId{a}, VertexId{b}});
  };
  for (std::uint32_t v = 1; v < vertices; ++v) add(static_cast<std::uint32_t>(pick(rng, v)), v);
  while (out.size() < edges)
    add(static_cast<std::uint32_t>(pick(rng, vertices)), static_cast<std::uint32_t>(pick(rng, vertices)));
  std::shuffle(out.begin(), out.end(), rng);
  return Graph(vertices, std::move(out));
}

inline Graph random_graph(Rng& rng, std::size_t vertices, std::size_t edges) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges; ++i)
    out.push_back({VertexId{static_cast<std::uint32_t>(pick(rng, vertices))},
                   VertexId{static_cast<std::uint32_t>(pick(rng, vertices))}});
  return Graph(vertices, std::move(out));
}

inline PathWord random_walk(Rng& rng, const Graph& g, VertexId start, std::size_t length) {
  std::vector<Step> steps;
  VertexId at = start;
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Step> options;
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
      if (g.edges()[e].src == at) options.push_back({EdgeId{e}, 1});
      if (g.edges()[e].dst == at) options.push_back({EdgeId{e}, -1});
    }
    if (options.empty()) break;
    Step s = options[pick(rng, options.size())];
    steps.push_back(s);
    at = s.sign > 0 ? g.edges()[s.edge.index].dst : g.edges()[s.edge.index].src;
  }
  return parse_path(g, start, std::move(steps));
}

inline Subgraph random_subgraph(Rng& rng, const Graph& g) {
  Subgraph s;
  s.vertices = std::uniform_int_distribution<Mask>(0, g.all_vertices())(rng) & g.all_vertices();
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    if (s.contains(ed.src) && s.contains(ed.dst) && pick(rng, 3) != 0) s.edges |= Mask{1} << e;
  }
  return s;
}

// Union-find connectivity, independent of the library's traversal.
inline std::vector<std::uint32_t> component_labels(const Graph& g, Mask skip_edges = 0) {
  std::vector<std::uint32_t> p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0U);
  auto find = [&](std::uint32_t v) {
    while (p[v] != v) v = p[v];
    return v;
  };
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if ((skip_edges >> e) & 1U) continue;
    p[find(g.edges()[e].src.index)] = find(g.edges()[e].dst.index);
  }
  std::vector<std::uint32_t> label(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) label[v] = find(v);
  return label;
}

inline std::size_t component_count(const Graph& g, Mask skip_edges = 0) {
  auto l = component_labels(g, skip_edges);
  return std::set<std::uint32_t>(l.begin(), l.end()).size();
}

inline std::set<std::uint32_t> brute_bridges(const Graph& g) {
  std::set<std::uint32_t> out;
  const std::size_t base = component_count(g);
  for (std::uint32_t e = 0; e < g.edge_count(); ++e)
    if (component_count(g, Mask{1} << e) > base) out.insert(e);
  return out;
}

/// Value state of a walk in the doubled graph: exponents reduced mod n (n = 0: integers).
struct WalkState {
  std::uint32_t vertex;
  std::vector<std::int64_t> vec;
  Subgraph spanned;
  friend auto operator<=>(const WalkState& a, const WalkState& b) {
    return std::tie(a.vertex, a.vec, a.spanned.vertices, a.spanned.edges) <=>
           std::tie(b.vertex, b.vec, b.spanned.vertices, b.spanned.edges);
  }
  friend bool operator==(const WalkState&, const WalkState&) = default;
};

/// Every (endpoint, value, spanned subgraph) reached by walks of length ≤ max_len
/// from `start` inside `allowed`. Trivial variety: vec stays empty.
inline std::set<WalkState> walk_states(const Graph& g, VarietySpec u, const Subgraph& allowed, VertexId start,
                                       std::size_t max_len) {
  const std::int64_t n = u.kind == VarietySpec::Kind::ab_exp ? u.exponent : 0;
  const bool track = u.is_abelian();
  std::set<WalkState> seen;
  if (!allowed.contains(start)) return seen;
  WalkState first{start.index, std::vector<std::int64_t>(track ? g.edge_count() : 0, 0), Subgraph::single(start)};
  std::vector<WalkState> frontier{first};
  seen.insert(first);
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<WalkState> next;
    for (const WalkState& s : frontier) {
      for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        if (!allowed.contains(EdgeId{e})) continue;
        const Edge& ed = g.edges()[e];
        for (int sign : {1, -1}) {
          const VertexId from = sign > 0 ? ed.src : ed.dst;
          const VertexId to = sign > 0 ? ed.dst : ed.src;
          if (from.index != s.vertex) continue;
          WalkState t = s;
          t.vertex = to.index;
          if (track) {
            t.vec[e] += sign;
            if (n) t.vec[e] = ((t.vec[e] % n) + n) % n;
          }
          t.spanned.vertices |= Mask{1} << to.index;
          t.spanned.edges |= Mask{1} << e;
          if (seen.insert(t).second) next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline bool same_value(const WalkState& s, const ArrowValue& x) {
  if (s.vertex != x.dst().index) return false;
  return std::equal(s.vec.begin(), s.vec.end(), x.vec().begin(), x.vec().end());
}

/// Walk of length ≤ max_len inside `allowed` with value x.
inline bool oracle_realizable(const Graph& g, const Subgraph& allowed, const ArrowValue& x, std::size_t max_len) {
  for (const WalkState& s : walk_states(g, x.variety(), allowed, x.src(), max_len))
    if (same_value(s, x)) return true;
  return false;
}

/// Intersection of spanned subgraphs of all walks of length ≤ max_len with value x.
inline std::optional<Subgraph> oracle_c0(const Graph& g, const ArrowValue& x, std::size_t max_len) {
  std::optional<Subgraph> out;
  for (const WalkState& s : walk_states(g, x.variety(), Subgraph::whole(g), x.src(), max_len)) {
    if (!same_value(s, x)) continue;
    out = out ? (*out & s.spanned) : s.spanned;
  }
  return out;
}

/// Closure of the seed set under composition by repeated pairwise products.
inline std::vector<bool> naive_closure(const ArrowTable& t, std::vector<bool> in) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!in[i]) continue;
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (!in[j]) continue;
        const ArrowValue& x = t.arrow(i);
        const ArrowValue& y = t.arrow(j);
        if (x.dst() != y.src()) continue;
        auto k = t.index_of(compose_values(x, y));
        if (!in[*k]) {
          in[*k] = true;
          grew = true;
        }
      }
    }
  }
  return in;
}

/// Undirected multigraph isomorphism by trying every vertex permutation.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto pairs = [](const Graph& g, const std::vector<std::uint32_t>& perm) {
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const Edge& e : g.edges()) {
      auto s = perm[e.src.index], d = perm[e.dst.index];
      out.emplace(std::min(s, d), std::max(s, d));
    }
    return out;
  };
  std::vector<std::uint32_t> id(a.vertex_count());
  std::iota(id.begin(), id.end(), 0U);
  const auto target = pairs(b, id);
  std::vector<std::uint32_t> perm = id;
  do {
    if (pairs(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Random relabelling of vertices and edges plus random redirections.
inline Graph scramble(Rng& rng, const Graph& g) {
  std::vector<std::uint32_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0U);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Edge f{VertexId{perm[e.src.index]}, VertexId{perm[e.dst.index]}};
    if (pick(rng, 2)) std::swap(f.src, f.dst);
    edges.push_back(f);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace bpe::testing
