#include "bpe/certificate.hpp"

#include <algorithm>

#include "bpe/content.hpp"
#include "bpe/error.hpp"
#include "bpe/fixtures.hpp"

namespace bpe {

namespace {

struct Malformed {
  std::string reason;
};

struct Checker {
  const Graph& g;
  std::vector<NodeBound>& nodes;

  // Returns (bound, level).
  std::pair<Subgraph, int> visit(const CertNode& node, const std::string& path) {
    const ArrowValue& x = node.arrow;
    if (x.variety().kind != VarietySpec::Kind::ab_free)
      throw Malformed{path + ": arrow is not an integer (ab) value"};
    if (!x.valid_for(g)) throw Malformed{path + ": arrow violates the boundary condition or ids"};

    std::size_t slot = nodes.size();
    nodes.push_back({path, {}, {}, 0});
    const Subgraph leaf = p0(g, x);
    Subgraph c = leaf;
    int level = 0;
    for (std::size_t f = 0; f < node.factorizations.size(); ++f) {
      const auto& factors = node.factorizations[f];
      const std::string fpath = path + "/" + std::to_string(f);
      if (factors.empty()) throw Malformed{fpath + ": empty factorization"};
      std::vector<std::int64_t> sum(g.edge_count(), 0);
      VertexId at = x.src();
      for (std::size_t k = 0; k < factors.size(); ++k) {
        const ArrowValue& y = factors[k].arrow;
        if (y.src() != at)
          throw Malformed{fpath + "/" + std::to_string(k) + ": factor does not start where the previous one ends"};
        at = y.dst();
        if (y.vec().size() == sum.size())
          for (std::size_t e = 0; e < sum.size(); ++e) sum[e] += y.vec()[e];
      }
      if (at != x.dst()) throw Malformed{fpath + ": factors do not end at the arrow's target"};
      if (!std::equal(sum.begin(), sum.end(), x.vec().begin(), x.vec().end()))
        throw Malformed{fpath + ": factors do not compose to the arrow"};
      Subgraph un;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        auto [b, lvl] = visit(factors[k], fpath + "/" + std::to_string(k));
        un |= b;
        level = std::max(level, lvl + 1);
      }
      c &= un;
    }
    Subgraph bound = component_of(g, c, x.src());
    nodes[slot] = {path, leaf, bound, level};
    return {bound, level};
  }
};

}  // namespace

std::string to_string(CheckReport::Verdict v) {
  switch (v) {
    case CheckReport::Verdict::verified:
      return "Verified";
    case CheckReport::Verdict::not_proven:
      return "NotProven";
    case CheckReport::Verdict::malformed:
      return "Malformed";
  }
  return {};
}

CheckReport check_certificate(const Certificate& c) {
  CheckReport r;
  if (c.claimed_level < 0) {
    r.reason = "claimed level is negative";
    return r;
  }
  if (!is_connected(c.graph)) {
    r.reason = "graph is not connected";
    return r;
  }
  try {
    Checker ck{c.graph, r.nodes};
    auto [bound, level] = ck.visit(c.root, "root");
    r.final_upper_p = bound;
    r.proven_level = level;
    r.verdict = bound.contains(c.root.arrow.dst()) ? CheckReport::Verdict::not_proven
                                                   : CheckReport::Verdict::verified;
  } catch (const Malformed& m) {
    r.verdict = CheckReport::Verdict::malformed;
    r.reason = m.reason;
    r.nodes.clear();
  }
  return r;
}

std::vector<Certificate> builtin_certificates() {
  std::vector<Certificate> out;
  for (auto [name, g] : {std::pair{"THETA3", fixtures::theta3()}, std::pair{"DIGONS2", fixtures::digons2()}}) {
    const VarietySpec ab = VarietySpec::ab_free();
    auto val = [&](const char* start, const char* word) {
      return value_of_path(g, ab, parse_path_text(g, *g.find_vertex(start), word));
    };
    CertNode root{val("u", "a"), {}};
    root.factorizations.push_back({CertNode{val("u", "c'"), {}}, CertNode{val("w", "c a b' c'"), {}},
                                   CertNode{val("w", "c b"), {}}});
    out.push_back({name, g, std::move(root), 1});
  }
  return out;
}

}  // namespace bpe
