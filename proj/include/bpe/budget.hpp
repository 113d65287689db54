#pragma once

#include <cstddef>
#include <string_view>

namespace bpe {

/// Size limits for the exhaustive searches. Overridable through the BPE_BUDGET
/// environment variable, e.g. BPE_BUDGET="arrows=50000,minor_edges=12".
/// Keys: arrows, minor_edges, survey_vertices, survey_edges.
struct Budget {
  std::size_t max_arrows = 20000;
  std::size_t minor_max_edges = 10;
  std::size_t survey_max_vertices = 4;
  std::size_t survey_max_edges = 6;

  /// Defaults with `spec` applied; throws DomainError on unknown keys or bad numbers.
  static Budget parse(std::string_view spec);
  /// Defaults with BPE_BUDGET applied, read once.
  static const Budget& current();
};

}  // namespace bpe
