#include "bpe/minors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "bpe/budget.hpp"
#include "bpe/error.hpp"
#include "bpe/fixtures.hpp"

namespace bpe {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicities(const Graph& g, bool directed) {
  Matrix m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    ++m[e.src.index][e.dst.index];
    if (!directed && !e.is_loop()) ++m[e.dst.index][e.src.index];
  }
  return m;
}

/// Vertex bijection a → b preserving multiplicities, if any.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const Graph& a, const Graph& b,
                                                          bool directed) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  Matrix ma = multiplicities(a, directed), mb = multiplicities(b, directed);
  auto signature = [&](const Matrix& m, std::size_t v) {
    std::vector<int> row = m[v], col(n);
    for (std::size_t w = 0; w < n; ++w) col[w] = m[w][v];
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    row.insert(row.end(), col.begin(), col.end());
    row.push_back(m[v][v]);
    return row;
  };
  std::vector<std::vector<int>> sa(n), sb(n);
  for (std::size_t v = 0; v < n; ++v) {
    sa[v] = signature(ma, v);
    sb[v] = signature(mb, v);
  }
  std::vector<std::uint32_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::uint32_t w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = ma[u][v] == mb[map[u]][w] && ma[v][u] == mb[w][map[u]];
      }
      if (!ok || ma[v][v] != mb[w][w]) continue;
      used[w] = true;
      map[v] = w;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

/// Applies the edits in order and records them; ids are translated through each result.
class EditRecorder {
 public:
  explicit EditRecorder(const Graph& g) : graph_(g), edge_now_(g.edge_count()), vertex_now_(g.vertex_count()) {
    for (std::uint32_t i = 0; i < g.edge_count(); ++i) edge_now_[i] = EdgeId{i};
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) vertex_now_[v] = VertexId{v};
  }
  void apply_to_edge(GraphEdit::Kind kind, std::uint32_t original) {
    apply({kind, edge_now_[original]->index});
  }
  void apply_to_vertex(GraphEdit::Kind kind, std::uint32_t original) {
    apply({kind, vertex_now_[original]->index});
  }
  void apply(GraphEdit op) {
    EditResult r = edit_graph(graph_, op);
    for (auto& e : edge_now_)
      if (e) e = r.edge_map[e->index];
    for (auto& v : vertex_now_)
      if (v) v = r.vertex_map[v->index];
    graph_ = std::move(r.graph);
    ops_.push_back(op);
  }
  const Graph& graph() const { return graph_; }
  std::optional<VertexId> vertex_now(std::uint32_t original) const { return vertex_now_[original]; }
  std::vector<GraphEdit> take_ops() { return std::move(ops_); }

 private:
  Graph graph_;
  std::vector<std::optional<EdgeId>> edge_now_;
  std::vector<std::optional<VertexId>> vertex_now_;
  std::vector<GraphEdit> ops_;
};

std::vector<std::uint32_t> bits_of(Mask m) {
  std::vector<std::uint32_t> out;
  while (m) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace

Graph replay_minor(const Graph& g, std::span<const GraphEdit> ops) {
  Graph cur = g;
  for (const GraphEdit& op : ops) cur = edit_graph(cur, op).graph;
  return cur;
}

bool isomorphic(const Graph& a, const Graph& b, bool directed) {
  return find_isomorphism(a, b, directed).has_value();
}

std::optional<MinorMatch> minor_contains(const Graph& g, const Graph& h) {
  if (g.edge_count() > Budget::current().minor_max_edges)
    throw BudgetError("minor search limited to " + std::to_string(Budget::current().minor_max_edges) +
                      " edges (graph has " + std::to_string(g.edge_count()) + ")");
  const std::size_t ne = g.edge_count(), nv = g.vertex_count();
  const std::size_t he = h.edge_count(), hv = h.vertex_count();
  if (he > ne || hv > nv) return std::nullopt;

  Matrix target = multiplicities(h, false);
  std::vector<int> h_isolated_check(hv, 0);
  for (const Edge& e : h.edges()) h_isolated_check[e.src.index] = h_isolated_check[e.dst.index] = 1;

  // Iterate kept sets of size |E(h)| in increasing mask order.
  std::vector<std::uint32_t> pick(he);
  std::iota(pick.begin(), pick.end(), 0U);
  while (true) {
    Mask kept = 0;
    for (auto i : pick) kept |= Mask{1} << i;
    const std::vector<std::uint32_t> rest = bits_of(g.all_edges() & ~kept);
    const std::size_t max_contract = nv - hv;
    for (Mask sub = 0; sub < (Mask{1} << rest.size()); ++sub) {
      if (static_cast<std::size_t>(std::popcount(sub)) > max_contract) continue;
      UnionFind uf(nv);
      bool forest = true;
      Mask contracted = 0;
      for (std::size_t k = 0; k < rest.size() && forest; ++k) {
        if (!((sub >> k) & 1U)) continue;
        const Edge& e = g.edges()[rest[k]];
        forest = uf.unite(e.src.index, e.dst.index);
        contracted |= Mask{1} << rest[k];
      }
      if (!forest) continue;
      // Classes touched by kept edges; the remaining classes are isolated.
      std::vector<std::uint32_t> roots;
      for (std::uint32_t v = 0; v < nv; ++v)
        if (uf.find(v) == v) roots.push_back(v);
      std::vector<bool> touched(nv, false);
      for (auto i : pick) {
        const Edge& e = g.edges()[i];
        touched[uf.find(e.src.index)] = touched[uf.find(e.dst.index)] = true;
      }
      std::size_t isolated = 0;
      for (auto r : roots) isolated += touched[r] ? 0 : 1;
      if (roots.size() < hv || roots.size() - hv > isolated) continue;
      // Build the quotient with surplus isolated classes dropped.
      std::size_t drop = roots.size() - hv;
      std::vector<std::int64_t> index(nv, -1);
      std::vector<std::uint32_t> dropped;
      std::uint32_t next = 0;
      for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        if (drop > 0 && !touched[*it]) {
          dropped.push_back(*it);
          --drop;
        }
      }
      for (auto r : roots) {
        if (std::find(dropped.begin(), dropped.end(), r) == dropped.end()) index[r] = next++;
      }
      std::vector<Edge> qedges;
      for (auto i : pick) {
        const Edge& e = g.edges()[i];
        qedges.push_back({VertexId{static_cast<std::uint32_t>(index[uf.find(e.src.index)])},
                          VertexId{static_cast<std::uint32_t>(index[uf.find(e.dst.index)])}});
      }
      Graph quotient(hv, qedges);
      auto vmap = find_isomorphism(quotient, h, false);
      if (!vmap) continue;

      // Replay as recorded edits: contractions, deletions, isolated vertices, redirections.
      EditRecorder rec(g);
      for (auto i : bits_of(contracted)) rec.apply_to_edge(GraphEdit::Kind::contract_edge, i);
      for (auto i : bits_of(g.all_edges() & ~kept & ~contracted))
        rec.apply_to_edge(GraphEdit::Kind::delete_edge, i);
      std::sort(dropped.begin(), dropped.end(), std::greater<>());
      for (auto r : dropped) rec.apply_to_vertex(GraphEdit::Kind::delete_vertex, r);
      // Match edges of the replayed graph to h's edges class by class and redirect.
      const Graph& cur = rec.graph();
      std::vector<std::uint32_t> cur_to_h(cur.vertex_count());
      for (std::uint32_t r : roots) {
        if (index[r] < 0) continue;
        auto now = rec.vertex_now(r);
        cur_to_h[now->index] = (*vmap)[static_cast<std::size_t>(index[r])];
      }
      std::vector<bool> h_used(he, false);
      std::vector<std::uint32_t> flips;
      for (std::uint32_t i = 0; i < cur.edge_count(); ++i) {
        const Edge& e = cur.edges()[i];
        std::uint32_t s = cur_to_h[e.src.index], d = cur_to_h[e.dst.index];
        std::optional<std::uint32_t> same, opposite;
        for (std::uint32_t j = 0; j < he; ++j) {
          if (h_used[j]) continue;
          const Edge& f = h.edges()[j];
          if (f.src.index == s && f.dst.index == d && !same) same = j;
          else if (f.src.index == d && f.dst.index == s && !opposite) opposite = j;
        }
        if (same) {
          h_used[*same] = true;
        } else {
          h_used[*opposite] = true;
          flips.push_back(i);
        }
      }
      for (auto i : flips) rec.apply({GraphEdit::Kind::redirect_edge, i});
      return MinorMatch{rec.take_ops()};
    }
    // Next combination.
    if (he == 0) break;
    std::size_t k = he;
    while (k > 0 && pick[k - 1] == ne - he + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < he; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

std::vector<Graph> minor_catalog() { return {fixtures::theta3(), fixtures::digons2()}; }

std::string catalog_name(std::size_t index) {
  return index == 0 ? "THETA3" : index == 1 ? "DIGONS2" : "?";
}

std::string describe(const StructureClass& s) {
  switch (s.tag) {
    case StructureClass::Tag::cycle_with_decorations:
      return "CycleWithDecorations(" + std::to_string(s.cycle_length) + ")";
    case StructureClass::Tag::at_most_two_vertices:
      return "AtMostTwoVertices";
    case StructureClass::Tag::contains_forbidden:
      return "ContainsForbidden(" + catalog_name(s.which) + ")";
  }
  return {};
}

Graph two_edge_connected_core(const Graph& g) {
  std::vector<Edge> loopless;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    if (g.edges()[i].is_loop()) continue;
    loopless.push_back(g.edges()[i]);
    names.push_back(g.edge_name(EdgeId{i}));
  }
  std::vector<std::string> vnames(g.vertex_names().begin(), g.vertex_names().end());
  Graph base(vnames, names, loopless);
  auto br = bridges(base);
  UnionFind uf(base.vertex_count());
  Mask bridge_mask = 0;
  for (EdgeId e : br) {
    uf.unite(base.edge(e).src.index, base.edge(e).dst.index);
    bridge_mask |= Mask{1} << e.index;
  }
  std::vector<std::int64_t> index(base.vertex_count(), -1);
  std::vector<std::string> core_names;
  for (std::uint32_t v = 0; v < base.vertex_count(); ++v) {
    if (uf.find(v) == v) {
      index[v] = static_cast<std::int64_t>(core_names.size());
      core_names.push_back(base.vertex_name(VertexId{v}));
    }
  }
  std::vector<Edge> edges;
  std::vector<std::string> enames;
  for (std::uint32_t i = 0; i < base.edge_count(); ++i) {
    if ((bridge_mask >> i) & 1U) continue;
    const Edge& e = base.edges()[i];
    edges.push_back({VertexId{static_cast<std::uint32_t>(index[uf.find(e.src.index)])},
                     VertexId{static_cast<std::uint32_t>(index[uf.find(e.dst.index)])}});
    enames.push_back(base.edge_name(EdgeId{i}));
  }
  return Graph(std::move(core_names), std::move(enames), std::move(edges));
}

bool is_tree_with_loops(const Graph& g) {
  if (!is_connected(g)) return false;
  std::size_t non_loops = 0;
  for (const Edge& e : g.edges()) non_loops += e.is_loop() ? 0 : 1;
  return non_loops + 1 == g.vertex_count();
}

StructureClass has_forbidden_minor(const Graph& g) {
  if (!is_connected(g)) throw DomainError("graph is not connected");
  auto catalog = minor_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (auto m = minor_contains(g, catalog[i]))
      return {StructureClass::Tag::contains_forbidden, 0, i, std::move(m)};
  }
  Graph core = two_edge_connected_core(g);
  if (core.vertex_count() <= 1)
    return {StructureClass::Tag::cycle_with_decorations, 0, 0, std::nullopt};
  bool cycle = core.edge_count() == core.vertex_count();
  for (std::uint32_t v = 0; v < core.vertex_count() && cycle; ++v)
    cycle = std::popcount(core.incident_edges(VertexId{v})) == 2;
  if (cycle)
    return {StructureClass::Tag::cycle_with_decorations, core.edge_count(), 0, std::nullopt};
  if (core.vertex_count() == 2)
    return {StructureClass::Tag::at_most_two_vertices, 0, 0, std::nullopt};
  throw std::logic_error("graph avoids the catalog but its core is neither a cycle nor two vertices");
}

std::vector<Graph> one_step_minors(const Graph& g) {
  std::vector<Graph> out;
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    EdgeId e{i};
    EditResult del = edit_graph(g, GraphEdit::delete_edge(e));
    for (const Subgraph& c : components(del.graph, Subgraph::whole(del.graph)))
      out.push_back(induced_graph(del.graph, c).graph);
    if (!g.edges()[i].is_loop()) out.push_back(edit_graph(g, GraphEdit::contract_edge(e)).graph);
  }
  return out;
}

PathWord transform_path(PathTransform kind, const Graph& g, EdgeId e, const PathWord& p) {
  const Edge& edge = g.edge(e);
  switch (kind) {
    case PathTransform::minus_e:
    case PathTransform::merge_uv: {
      EditResult r;
      if (kind == PathTransform::minus_e) {
        if (!edge.is_loop()) throw DomainError("minus_e needs a loop; " + g.edge_name(e) + " is not one");
        r = edit_graph(g, GraphEdit::delete_edge(e));
      } else {
        auto br = bridges(g);
        if (std::find(br.begin(), br.end(), e) == br.end())
          throw DomainError("merge_uv needs a bridge; " + g.edge_name(e) + " is not one");
        r = edit_graph(g, GraphEdit::contract_edge(e));
      }
      parse_path(g, p.start(), p.steps());
      std::vector<Step> steps;
      for (const Step& s : p.steps()) {
        if (s.edge == e) continue;
        steps.push_back({*r.edge_map[s.edge.index], s.sign});
      }
      return parse_path(r.graph, *r.vertex_map[p.start().index], std::move(steps));
    }
    case PathTransform::plus_e: {
      if (edge.is_loop()) throw DomainError("plus_e needs a non-loop edge");
      EditResult r = edit_graph(g, GraphEdit::contract_edge(e));
      const Graph& h = r.graph;
      parse_path(h, p.start(), p.steps());
      std::vector<std::optional<EdgeId>> edge_back(h.edge_count());
      for (std::uint32_t i = 0; i < g.edge_count(); ++i)
        if (r.edge_map[i]) edge_back[r.edge_map[i]->index] = EdgeId{i};
      const VertexId merged = *r.vertex_map[edge.src.index];
      auto lift_vertex = [&](VertexId w) {
        if (w == merged) return edge.dst;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
          if (r.vertex_map[v] == w) return VertexId{v};
        throw DomainError("vertex has no preimage");
      };
      VertexId at = lift_vertex(p.start());
      std::vector<Step> steps;
      for (const Step& s : p.steps()) {
        Step lifted{*edge_back[s.edge.index], s.sign};
        if (step_source(g, lifted) != at) steps.push_back({e, -1});  // at τ e, leaving from ι e
        steps.push_back(lifted);
        at = step_target(g, lifted);
        if (at == edge.src) {
          steps.push_back({e, 1});
          at = edge.dst;
        }
      }
      return parse_path(g, lift_vertex(p.start()), std::move(steps));
    }
  }
  throw DomainError("unknown transform");
}

}  // namespace bpe
