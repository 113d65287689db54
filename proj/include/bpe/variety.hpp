#pragma once

// Arrow values of the free category over a graph for the shipped Abelian-type
// varieties. For an Abelian variety an arrow is determined by its endpoints
// and the net exponent of every edge (an integer, or a residue mod n); for the
// trivial variety only the endpoints remain.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bpe/graph.hpp"
#include "bpe/path.hpp"

namespace bpe {

struct VarietySpec {
  enum class Kind : std::uint8_t { trivial, ab_exp, ab_free };
  Kind kind = Kind::trivial;
  std::uint32_t exponent = 0;  // only for ab_exp, ≥ 2

  static VarietySpec trivial() { return {Kind::trivial, 0}; }
  static VarietySpec ab_exp(std::uint32_t n);
  static VarietySpec ab_free() { return {Kind::ab_free, 0}; }

  bool is_abelian() const { return kind != Kind::trivial; }
  bool locally_finite() const { return kind != Kind::ab_free; }
  /// "trivial", "ab" or "ab:N".
  std::string to_string() const;

  friend bool operator==(const VarietySpec&, const VarietySpec&) = default;
};

/// Accepts "trivial", "ab", "ab:N" with N ≥ 2.
VarietySpec parse_variety(std::string_view text);

/// Per-vertex net flow: Σ over entering edges minus Σ over leaving edges.
/// Loops contribute nothing.
std::vector<std::int64_t> boundary(const Graph& g, std::span<const std::int64_t> vec);

class ArrowValue {
 public:
  /// Checked: ids in range, vector length |E| (empty for trivial), boundary
  /// equal to [w = dst] − [w = src] (mod n for ab:N). Residues are normalized to [0, n).
  static ArrowValue make(const Graph& g, VarietySpec u, VertexId src, VertexId dst,
                         std::vector<std::int64_t> vec);
  /// No validation; for staging untrusted input that is checked later.
  static ArrowValue unchecked(VarietySpec u, VertexId src, VertexId dst,
                              std::vector<std::int64_t> vec);
  static ArrowValue identity(const Graph& g, VarietySpec u, VertexId v);

  VertexId src() const { return src_; }
  VertexId dst() const { return dst_; }
  VarietySpec variety() const { return variety_; }
  std::span<const std::int64_t> vec() const { return vec_; }
  std::int64_t coefficient(EdgeId e) const { return vec_.empty() ? 0 : vec_.at(e.index); }
  /// Edges with a nonzero coefficient.
  Mask support() const;
  bool is_identity() const { return src_ == dst_ && support() == 0; }

  /// Same conditions as make(), without throwing.
  bool valid_for(const Graph& g) const;
  /// Σ vec[e]·n^e for ab:N, 0 for trivial. Distinct per (src, dst) block.
  std::uint64_t code() const;

  friend bool operator==(const ArrowValue&, const ArrowValue&) = default;

 private:
  ArrowValue(VarietySpec u, VertexId src, VertexId dst, std::vector<std::int64_t> vec)
      : src_(src), dst_(dst), variety_(u), vec_(std::move(vec)) {}

  VertexId src_;
  VertexId dst_;
  VarietySpec variety_;
  std::vector<std::int64_t> vec_;
};

/// Canonical order: (src, dst, coefficients compared from the last edge down),
/// which for ab:N is ascending code().
bool canonical_less(const ArrowValue& x, const ArrowValue& y);

ArrowValue value_of_path(const Graph& g, VarietySpec u, const PathWord& p);
/// Throws CompositionError on endpoint or variety mismatch.
ArrowValue compose_values(const ArrowValue& x, const ArrowValue& y);
ArrowValue invert_value(const ArrowValue& x);

/// Number of arrows of a connected graph: |V|² · n^(|E|−|V|+1) for ab:N, |V|² for trivial.
std::uint64_t value_count(const Graph& g, VarietySpec u);
/// All arrows in canonical order. Requires a connected graph and a locally finite variety.
std::vector<ArrowValue> enumerate_values(const Graph& g, VarietySpec u);

/// True iff some walk with value x stays inside `allowed`.
bool realizable_in(const Graph& g, const Subgraph& allowed, const ArrowValue& x);
/// Some walk with value x (not canonical).
PathWord realize_value(const Graph& g, const ArrowValue& x);

/// An integer (ab) value congruent to x mod n with the same endpoints.
ArrowValue lift_to_free(const Graph& g, const ArrowValue& x);

/// "src->dst[e:k,...]" listing nonzero coefficients by edge name.
std::string format_value(const Graph& g, const ArrowValue& x);

}  // namespace bpe
