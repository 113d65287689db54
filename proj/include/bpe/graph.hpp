#pragma once

// Finite directed multigraphs and their subgraph lattice.
//
// Subgraphs are pairs of 64-bit masks over the host graph's vertex and edge
// ids, so a Graph is capped at 64 vertices and 64 edges. Every exhaustive
// algorithm in this library is exponential well below that size.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bpe {

using Mask = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxEdges = 64;

struct VertexId {
  std::uint32_t index = 0;
  friend auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t index = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  VertexId src;
  VertexId dst;
  bool is_loop() const { return src == dst; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  /// Default names: vertices "0", "1", ...; edges "e0", "e1", ...
  Graph(std::size_t vertex_count, std::vector<Edge> edges);
  Graph(std::vector<std::string> vertex_names, std::vector<std::string> edge_names,
        std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  const std::string& vertex_name(VertexId v) const;
  const std::string& edge_name(EdgeId e) const;
  std::span<const std::string> vertex_names() const { return vertex_names_; }
  std::span<const std::string> edge_names() const { return edge_names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  void check(VertexId v) const;
  void check(EdgeId e) const;

  Mask all_vertices() const { return low_bits(vertex_count()); }
  Mask all_edges() const { return low_bits(edge_count()); }
  /// Edges with `v` as an endpoint (loops included).
  Mask incident_edges(VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
  void validate() const;

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<Edge> edges_;
};

/// An element of a subgraph: a single vertex or a single edge.
struct Atom {
  enum class Kind : std::uint8_t { vertex, edge };
  Kind kind = Kind::vertex;
  std::uint32_t index = 0;

  static Atom of(VertexId v) { return {Kind::vertex, v.index}; }
  static Atom of(EdgeId e) { return {Kind::edge, e.index}; }
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Vertices in ascending order, then edges in ascending order.
std::vector<Atom> atoms(const Graph& g);

struct Subgraph {
  Mask vertices = 0;
  Mask edges = 0;

  static Subgraph whole(const Graph& g) { return {g.all_vertices(), g.all_edges()}; }
  static Subgraph single(VertexId v) { return {Mask{1} << v.index, 0}; }

  bool contains(VertexId v) const { return (vertices >> v.index) & 1U; }
  bool contains(EdgeId e) const { return (edges >> e.index) & 1U; }
  bool contains(Atom a) const {
    return a.kind == Atom::Kind::vertex ? contains(VertexId{a.index}) : contains(EdgeId{a.index});
  }
  bool empty() const { return vertices == 0 && edges == 0; }
  bool subset_of(const Subgraph& o) const {
    return (vertices & ~o.vertices) == 0 && (edges & ~o.edges) == 0;
  }

  Subgraph& operator|=(const Subgraph& o) {
    vertices |= o.vertices;
    edges |= o.edges;
    return *this;
  }
  Subgraph& operator&=(const Subgraph& o) {
    vertices &= o.vertices;
    edges &= o.edges;
    return *this;
  }
  friend Subgraph operator|(Subgraph a, const Subgraph& b) { return a |= b; }
  friend Subgraph operator&(Subgraph a, const Subgraph& b) { return a &= b; }
  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

/// Edge ⇒ both endpoints present, and all ids in range.
bool is_closed(const Graph& g, const Subgraph& s);

/// Maximal connected (undirected) part of `s` containing `v`.
Subgraph component_of(const Graph& g, const Subgraph& s, VertexId v);
/// Components in order of their smallest vertex.
std::vector<Subgraph> components(const Graph& g, const Subgraph& s);
bool is_connected(const Graph& g, const Subgraph& s);
bool is_connected(const Graph& g);

/// Edges whose removal disconnects their component, ascending. Loops are never bridges.
std::vector<EdgeId> bridges(const Graph& g);
bool is_two_edge_connected(const Graph& g);

Subgraph without_edge(const Graph& g, EdgeId e);
/// Removes `v` together with its incident edges.
Subgraph without_vertex(const Graph& g, VertexId v);

// Elementary edits. Results are fresh graphs with dense ids plus the map from
// old ids to new ones (nullopt where the element was removed).

struct GraphEdit {
  enum class Kind : std::uint8_t { delete_edge, delete_vertex, contract_edge, redirect_edge };
  Kind kind = Kind::delete_edge;
  std::uint32_t id = 0;

  static GraphEdit delete_edge(EdgeId e) { return {Kind::delete_edge, e.index}; }
  static GraphEdit delete_vertex(VertexId v) { return {Kind::delete_vertex, v.index}; }
  static GraphEdit contract_edge(EdgeId e) { return {Kind::contract_edge, e.index}; }
  static GraphEdit redirect_edge(EdgeId e) { return {Kind::redirect_edge, e.index}; }
  friend bool operator==(const GraphEdit&, const GraphEdit&) = default;
};

struct EditResult {
  Graph graph;
  std::vector<std::optional<VertexId>> vertex_map;
  std::vector<std::optional<EdgeId>> edge_map;
};

/// Contraction merges ι e and τ e into the lower-indexed of the two (keeping
/// its name) and drops e; contracting a loop is a DomainError.
EditResult edit_graph(const Graph& g, const GraphEdit& edit);

/// Keeps exactly the vertices and edges of a closed subgraph, re-indexed densely.
EditResult induced_graph(const Graph& g, const Subgraph& keep);

}  // namespace bpe
