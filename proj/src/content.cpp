#include "bpe/content.hpp"

#include <set>
#include <utility>

#include "bpe/error.hpp"

namespace bpe {

Subgraph ab_content(const Graph& g, const ArrowValue& x) {
  if (!x.variety().is_abelian())
    throw UnsupportedVariety("content is only defined here for Abelian varieties");
  if (!x.valid_for(g)) throw DomainError("arrow value is not valid for the graph");
  Subgraph s = Subgraph::single(x.src());
  s.edges = x.support();
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    if (!s.contains(EdgeId{i})) continue;
    const Edge& e = g.edges()[i];
    s.vertices |= (Mask{1} << e.src.index) | (Mask{1} << e.dst.index);
  }
  return s;
}

Subgraph c0_exact(const Graph& g, const ArrowValue& x) {
  Subgraph c0 = Subgraph::single(x.src()) | Subgraph::single(x.dst());
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    if (!realizable_in(g, without_edge(g, EdgeId{i}), x)) c0.edges |= Mask{1} << i;
  }
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    VertexId w{v};
    if (c0.contains(w)) continue;
    if (!realizable_in(g, without_vertex(g, w), x)) c0.vertices |= Mask{1} << v;
  }
  return c0;
}

Subgraph p0(const Graph& g, const ArrowValue& x) {
  return component_of(g, c0_exact(g, x), x.src());
}

ContentReport content_report(const Graph& g, const ArrowValue& x) {
  Subgraph c0 = c0_exact(g, x);
  Subgraph hat = x.variety().is_abelian() ? ab_content(g, x) : Subgraph::single(x.src());
  return {c0, hat, component_of(g, c0, x.src()), x};
}

bool bounded_walk_exists(const Graph& g, const Subgraph& allowed, const ArrowValue& x,
                         std::size_t max_len) {
  if (!x.valid_for(g)) throw DomainError("arrow value is not valid for the graph");
  if (!allowed.contains(x.src())) return false;
  const VarietySpec u = x.variety();
  const std::size_t width = u.is_abelian() ? g.edge_count() : 0;
  using State = std::pair<std::uint32_t, std::vector<std::int64_t>>;

  State start{x.src().index, std::vector<std::int64_t>(width, 0)};
  const State goal{x.dst().index, std::vector<std::int64_t>(x.vec().begin(), x.vec().end())};
  std::set<State> seen{start};
  std::vector<State> frontier{start};
  if (start == goal) return true;
  for (std::size_t len = 0; len < max_len && !frontier.empty(); ++len) {
    std::vector<State> next;
    for (const State& st : frontier) {
      for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
        if (!allowed.contains(EdgeId{i})) continue;
        const Edge& e = g.edges()[i];
        for (int sign : {1, -1}) {
          std::uint32_t from = sign > 0 ? e.src.index : e.dst.index;
          if (from != st.first) continue;
          State nx{sign > 0 ? e.dst.index : e.src.index, st.second};
          if (width > 0) {
            std::int64_t& c = nx.second[i];
            c += sign;
            if (u.kind == VarietySpec::Kind::ab_exp) {
              const auto n = static_cast<std::int64_t>(u.exponent);
              c = ((c % n) + n) % n;
            }
          }
          if (nx == goal) return true;
          if (seen.insert(nx).second) next.push_back(std::move(nx));
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

Subgraph c0_oracle(const Graph& g, const ArrowValue& x, std::size_t max_len) {
  if (g.edge_count() > 6) throw DomainError("c0_oracle is limited to graphs with at most 6 edges");
  if (max_len > 12) throw DomainError("c0_oracle is limited to walks of length at most 12");
  const Subgraph whole = Subgraph::whole(g);
  if (!bounded_walk_exists(g, whole, x, max_len))
    throw DomainError("no walk of length <= " + std::to_string(max_len) + " realizes the value");
  Subgraph out;
  for (const Atom& a : atoms(g)) {
    Subgraph avoid = a.kind == Atom::Kind::vertex ? without_vertex(g, VertexId{a.index})
                                                  : without_edge(g, EdgeId{a.index});
    if (!bounded_walk_exists(g, avoid, x, max_len)) {
      if (a.kind == Atom::Kind::vertex) out.vertices |= Mask{1} << a.index;
      else out.edges |= Mask{1} << a.index;
    }
  }
  return out;
}

}  // namespace bpe
