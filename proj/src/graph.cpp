#include "bpe/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "bpe/error.hpp"

namespace bpe {

namespace {

std::vector<std::string> numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || s.back() == '\'') return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_names_(numbered(vertex_count, "")),
      edge_names_(numbered(edges.size(), "e")),
      edges_(std::move(edges)) {
  validate();
}

Graph::Graph(std::vector<std::string> vertex_names, std::vector<std::string> edge_names,
             std::vector<Edge> edges)
    : vertex_names_(std::move(vertex_names)),
      edge_names_(std::move(edge_names)),
      edges_(std::move(edges)) {
  validate();
}

void Graph::validate() const {
  if (vertex_names_.size() > kMaxVertices) throw DomainError("graph has more than 64 vertices");
  if (edges_.size() > kMaxEdges) throw DomainError("graph has more than 64 edges");
  if (edge_names_.size() != edges_.size())
    throw DomainError("edge name count does not match edge count");
  for (const auto& e : edges_) {
    if (e.src.index >= vertex_count() || e.dst.index >= vertex_count())
      throw DomainError("edge endpoint out of range");
  }
  auto check_names = [](const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
      if (!valid_name(n)) throw DomainError(std::string("invalid ") + what + " name '" + n + "'");
      if (!seen.insert(n).second)
        throw DomainError(std::string("duplicate ") + what + " name '" + n + "'");
    }
  };
  check_names(vertex_names_, "vertex");
  check_names(edge_names_, "edge");
}

void Graph::check(VertexId v) const {
  if (v.index >= vertex_count())
    throw DomainError("vertex id " + std::to_string(v.index) + " out of range");
}

void Graph::check(EdgeId e) const {
  if (e.index >= edge_count())
    throw DomainError("edge id " + std::to_string(e.index) + " out of range");
}

const Edge& Graph::edge(EdgeId e) const {
  check(e);
  return edges_[e.index];
}

const std::string& Graph::vertex_name(VertexId v) const {
  check(v);
  return vertex_names_[v.index];
}

const std::string& Graph::edge_name(EdgeId e) const {
  check(e);
  return edge_names_[e.index];
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - vertex_names_.begin())};
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end()) return std::nullopt;
  return EdgeId{static_cast<std::uint32_t>(it - edge_names_.begin())};
}

Mask Graph::incident_edges(VertexId v) const {
  check(v);
  Mask m = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].src == v || edges_[i].dst == v) m |= Mask{1} << i;
  }
  return m;
}

std::vector<Atom> atoms(const Graph& g) {
  std::vector<Atom> out;
  out.reserve(g.vertex_count() + g.edge_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) out.push_back(Atom::of(VertexId{v}));
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) out.push_back(Atom::of(EdgeId{e}));
  return out;
}

bool is_closed(const Graph& g, const Subgraph& s) {
  if ((s.vertices & ~g.all_vertices()) != 0 || (s.edges & ~g.all_edges()) != 0) return false;
  bool ok = true;
  for_each_bit(s.edges, [&](std::uint32_t i) {
    const Edge& e = g.edges()[i];
    if (!s.contains(e.src) || !s.contains(e.dst)) ok = false;
  });
  return ok;
}

Subgraph component_of(const Graph& g, const Subgraph& s, VertexId v) {
  g.check(v);
  if (!s.contains(v)) throw DomainError("vertex " + g.vertex_name(v) + " is not in the subgraph");
  Subgraph comp = Subgraph::single(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for_each_bit(s.edges & ~comp.edges, [&](std::uint32_t i) {
      const Edge& e = g.edges()[i];
      if (comp.contains(e.src) || comp.contains(e.dst)) {
        comp.edges |= Mask{1} << i;
        comp.vertices |= (Mask{1} << e.src.index) | (Mask{1} << e.dst.index);
        grew = true;
      }
    });
  }
  return comp;
}

std::vector<Subgraph> components(const Graph& g, const Subgraph& s) {
  std::vector<Subgraph> out;
  Mask left = s.vertices;
  while (left != 0) {
    VertexId v{static_cast<std::uint32_t>(std::countr_zero(left))};
    Subgraph c = component_of(g, s, v);
    out.push_back(c);
    left &= ~c.vertices;
  }
  return out;
}

bool is_connected(const Graph& g, const Subgraph& s) {
  if (s.vertices == 0) return false;
  VertexId v{static_cast<std::uint32_t>(std::countr_zero(s.vertices))};
  return component_of(g, s, v).vertices == s.vertices;
}

bool is_connected(const Graph& g) { return is_connected(g, Subgraph::whole(g)); }

std::vector<EdgeId> bridges(const Graph& g) {
  // Lowlink DFS keyed on edge ids so parallel edges are handled.
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(n);  // (neighbour, edge)
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.is_loop()) continue;
    adj[e.src.index].emplace_back(e.dst.index, i);
    adj[e.dst.index].emplace_back(e.src.index, i);
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  int timer = 0;
  std::function<void(std::uint32_t, std::int64_t)> dfs = [&](std::uint32_t v, std::int64_t via) {
    disc[v] = low[v] = timer++;
    for (auto [w, e] : adj[v]) {
      if (static_cast<std::int64_t>(e) == via) continue;
      if (disc[w] == -1) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(EdgeId{e});
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    if (disc[v] == -1) dfs(v, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_edge_connected(const Graph& g) { return is_connected(g) && bridges(g).empty(); }

Subgraph without_edge(const Graph& g, EdgeId e) {
  g.check(e);
  Subgraph s = Subgraph::whole(g);
  s.edges &= ~(Mask{1} << e.index);
  return s;
}

Subgraph without_vertex(const Graph& g, VertexId v) {
  Subgraph s = Subgraph::whole(g);
  s.edges &= ~g.incident_edges(v);
  s.vertices &= ~(Mask{1} << v.index);
  return s;
}

namespace {

/// Rebuilds `g` keeping vertices/edges with a target id; `vertex_target` may merge ids.
EditResult rebuild(const Graph& g, const std::vector<std::optional<std::uint32_t>>& vertex_target,
                   std::size_t new_vertex_count, const std::vector<bool>& keep_edge,
                   const std::vector<bool>& flip_edge) {
  EditResult r;
  std::vector<std::string> vnames(new_vertex_count);
  r.vertex_map.resize(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!vertex_target[v]) continue;
    std::uint32_t t = *vertex_target[v];
    r.vertex_map[v] = VertexId{t};
    if (vnames[t].empty()) vnames[t] = g.vertex_name(VertexId{v});
  }
  std::vector<std::string> enames;
  std::vector<Edge> edges;
  r.edge_map.resize(g.edge_count());
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    if (!keep_edge[i]) continue;
    const Edge& e = g.edges()[i];
    Edge ne{VertexId{*vertex_target[e.src.index]}, VertexId{*vertex_target[e.dst.index]}};
    if (flip_edge[i]) std::swap(ne.src, ne.dst);
    r.edge_map[i] = EdgeId{static_cast<std::uint32_t>(edges.size())};
    edges.push_back(ne);
    enames.push_back(g.edge_name(EdgeId{i}));
  }
  r.graph = Graph(std::move(vnames), std::move(enames), std::move(edges));
  return r;
}

}  // namespace

EditResult edit_graph(const Graph& g, const GraphEdit& edit) {
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  std::vector<std::optional<std::uint32_t>> target(nv);
  std::vector<bool> keep(ne, true), flip(ne, false);
  for (std::uint32_t v = 0; v < nv; ++v) target[v] = v;
  std::size_t new_nv = nv;

  switch (edit.kind) {
    case GraphEdit::Kind::delete_edge:
      g.check(EdgeId{edit.id});
      keep[edit.id] = false;
      break;
    case GraphEdit::Kind::redirect_edge:
      g.check(EdgeId{edit.id});
      flip[edit.id] = true;
      break;
    case GraphEdit::Kind::delete_vertex: {
      VertexId gone{edit.id};
      g.check(gone);
      for (std::uint32_t i = 0; i < ne; ++i) {
        const Edge& e = g.edges()[i];
        if (e.src == gone || e.dst == gone) keep[i] = false;
      }
      for (std::uint32_t v = 0; v < nv; ++v) {
        if (v == edit.id) target[v].reset();
        else if (v > edit.id) target[v] = v - 1;
      }
      new_nv = nv - 1;
      break;
    }
    case GraphEdit::Kind::contract_edge: {
      const Edge& e = g.edge(EdgeId{edit.id});
      if (e.is_loop()) throw DomainError("cannot contract loop " + g.edge_name(EdgeId{edit.id}));
      std::uint32_t keep_v = std::min(e.src.index, e.dst.index);
      std::uint32_t drop_v = std::max(e.src.index, e.dst.index);
      keep[edit.id] = false;
      for (std::uint32_t v = 0; v < nv; ++v) {
        if (v == drop_v) target[v] = keep_v;
        else if (v > drop_v) target[v] = v - 1;
      }
      new_nv = nv - 1;
      break;
    }
  }
  return rebuild(g, target, new_nv, keep, flip);
}

EditResult induced_graph(const Graph& g, const Subgraph& keep) {
  if (!is_closed(g, keep)) throw DomainError("subgraph is not closed");
  std::vector<std::optional<std::uint32_t>> target(g.vertex_count());
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (keep.contains(VertexId{v})) target[v] = next++;
  }
  std::vector<bool> keep_edge(g.edge_count()), flip(g.edge_count(), false);
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) keep_edge[i] = keep.contains(EdgeId{i});
  return rebuild(g, target, next, keep_edge, flip);
}

}  // namespace bpe
