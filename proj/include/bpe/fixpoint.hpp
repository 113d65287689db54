#pragma once

// Exact C_n / P_n recursion over the finite free category of a connected
// graph, for locally finite varieties (trivial, ab:N).
//
// An atom g is dropped from C_{n+1}(x) iff x factors as x_1⋯x_k (k ≥ 1) with
// g ∉ P_n(x_i) for every i, i.e. iff x lies in the closure under composition
// of A_g = {y : g ∉ P_n(y)}. The engine computes that closure per atom with a
// worklist, so factorizations of every length are covered.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bpe/graph.hpp"
#include "bpe/path.hpp"
#include "bpe/variety.hpp"

namespace bpe {

class ArrowTable {
 public:
  const Graph& graph() const { return shape_->graph; }
  VarietySpec variety() const { return shape_->variety; }
  std::span<const ArrowValue> arrows() const { return shape_->arrows; }
  const ArrowValue& arrow(std::size_t i) const { return shape_->arrows.at(i); }
  std::size_t size() const { return shape_->arrows.size(); }

  /// P_n per arrow, and the C_n it was cut from.
  std::span<const Subgraph> p_current() const { return p_; }
  std::span<const Subgraph> c_current() const { return c_; }
  int level() const { return level_; }

  std::optional<std::size_t> index_of(const ArrowValue& x) const;
  /// Index of x_i x_j, or nullopt if dst(x_i) ≠ src(x_j).
  std::optional<std::size_t> compose(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;
  /// Arrows with the given source (resp. target), ascending.
  std::span<const std::uint32_t> starting_at(VertexId v) const { return shape_->by_src.at(v.index); }
  std::span<const std::uint32_t> ending_at(VertexId v) const { return shape_->by_dst.at(v.index); }

  /// Same arrows, different subgraph assignment.
  ArrowTable with_subgraphs(std::vector<Subgraph> c, std::vector<Subgraph> p, int level) const;

 private:
  friend ArrowTable enumerate_arrows(const Graph&, VarietySpec);

  struct Shape {
    Graph graph;
    VarietySpec variety;
    std::vector<ArrowValue> arrows;
    std::vector<std::uint64_t> codes;
    std::vector<std::vector<std::uint32_t>> by_src, by_dst;
    // block (src·|V| + dst) → code → index
    std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> blocks;
    std::vector<std::uint32_t> inverse;
    // compose_table[i][k] = index of arrow(i) · by_src[dst(i)][k]; empty when too large
    std::vector<std::vector<std::uint32_t>> compose_table;
  };

  std::optional<std::size_t> lookup(std::uint32_t src, std::uint32_t dst, std::uint64_t code) const;
  std::uint64_t composed_code(std::size_t i, std::size_t j) const;

  std::shared_ptr<const Shape> shape_;
  std::vector<Subgraph> c_;
  std::vector<Subgraph> p_;
  int level_ = 0;
};

/// Level-0 table: every arrow of the free category with C_0 and P_0 filled in.
/// Throws UnsupportedVariety for ab, DomainError for disconnected graphs and
/// BudgetError above Budget::max_arrows.
ArrowTable enumerate_arrows(const Graph& g, VarietySpec u);

/// Membership mask over arrow indices: closure under composition of
/// {y : atom ∉ P_n(y)}.
std::vector<bool> avoidance_closure(const ArrowTable& t, Atom atom);

/// One round of the recursion: level n → n+1.
ArrowTable fixpoint_step(const ArrowTable& t);

struct TraceEntry {
  int level;
  std::size_t arrow;
  Subgraph c;
  Subgraph p;
};

/// Iterates fixpoint_step until no entry changes. When `trace` is given it
/// receives every level-0 entry and then one entry per changed arrow per level.
ArrowTable fixpoint_run(const ArrowTable& t, std::vector<TraceEntry>* trace = nullptr);

struct BreakingWitness {
  std::size_t arrow;  // first arrow in canonical order with dst ∉ P
  PathWord path;
  int level_found;    // first level n with dst ∉ P_n
};

struct Verdict {
  ArrowTable table;  // stabilized: p_current() is P(x)
  std::vector<TraceEntry> trace;
  std::optional<BreakingWitness> breaking;

  bool holds() const { return !breaking.has_value(); }
};

Verdict decide_T(const Graph& g, VarietySpec u);

/// ψ|Γ = id and P(xy) ⊆ P(x) ∪ P(y) on a stabilized table. Returns false if
/// some P(x) misses its source or is not a connected closed subgraph; throws
/// DomainError if the table has a breaking arrow.
bool premorphism_check(const ArrowTable& t);

/// `n=<level> arrow=<value> P={vertices;edges}` lines and the final VERDICT line.
void write_trace(std::ostream& out, const Verdict& v);
/// "{u,v;a}" style listing by name.
std::string format_subgraph(const Graph& g, const Subgraph& s);

}  // namespace bpe
