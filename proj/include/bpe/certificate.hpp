#pragma once

// Finite certificates that a path is breaking over the free Abelian variety.
//
// A certificate is a tree of integer arrow values. Each internal node lists one
// or more factorizations of its arrow into child arrows. The checker computes
// an upper bound P̂ ⊇ P_n bottom-up: leaves get the exact P_0, an internal node
// gets the component at its source of P̂_0(x) ∩ ⋂_f ⋃_{child ∈ f} P̂(child).
// If the target vertex falls out of the root bound, the root arrow is breaking.

#include <string>
#include <vector>

#include "bpe/graph.hpp"
#include "bpe/variety.hpp"

namespace bpe {

struct CertNode {
  ArrowValue arrow;
  std::vector<std::vector<CertNode>> factorizations;
};

struct Certificate {
  std::string name;
  Graph graph;
  CertNode root;
  int claimed_level = 0;
};

struct NodeBound {
  std::string path;  // "root", "root/0/2" = factorization 0, child 2
  Subgraph leaf_bound;
  Subgraph bound;
  int level;
};

struct CheckReport {
  enum class Verdict { verified, not_proven, malformed };
  Verdict verdict = Verdict::malformed;
  std::string reason;  // set when malformed
  Subgraph final_upper_p;
  int proven_level = 0;
  std::vector<NodeBound> nodes;  // pre-order
};

std::string to_string(CheckReport::Verdict v);

CheckReport check_certificate(const Certificate& c);

/// The two catalog certificates (THETA3, DIGONS2): root = value of path a,
/// one factorization into c⁻¹, c a b⁻¹ c⁻¹ and c b.
std::vector<Certificate> builtin_certificates();

}  // namespace bpe
