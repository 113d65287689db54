#include "bpe/path.hpp"

#include <algorithm>
#include <sstream>

#include "bpe/error.hpp"

namespace bpe {

VertexId step_source(const Graph& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.sign > 0 ? e.src : e.dst;
}

VertexId step_target(const Graph& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.sign > 0 ? e.dst : e.src;
}

PathWord parse_path(const Graph& g, VertexId start, std::vector<Step> steps) {
  g.check(start);
  VertexId at = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    g.check(s.edge);
    if (s.sign != 1 && s.sign != -1) throw DomainError("step sign must be +1 or -1");
    if (step_source(g, s) != at) {
      throw ValidityError("step " + std::to_string(i + 1) + " (" + g.edge_name(s.edge) +
                              (s.sign < 0 ? "'" : "") + ") does not start at vertex " +
                              g.vertex_name(at),
                          i + 1);
    }
    at = step_target(g, s);
  }
  return PathWord(start, at, std::move(steps));
}

PathWord inverse_path(const PathWord& p) {
  std::vector<Step> steps(p.steps_.rbegin(), p.steps_.rend());
  for (auto& s : steps) s.sign = static_cast<std::int8_t>(-s.sign);
  return PathWord(p.end_, p.start_, std::move(steps));
}

PathWord concat_paths(const PathWord& p, const PathWord& q) {
  if (p.end_ != q.start_) {
    throw CompositionError("cannot concatenate: first path ends at vertex " +
                           std::to_string(p.end_.index) + ", second starts at " +
                           std::to_string(q.start_.index));
  }
  std::vector<Step> steps = p.steps_;
  steps.insert(steps.end(), q.steps_.begin(), q.steps_.end());
  return PathWord(p.start_, q.end_, std::move(steps));
}

Subgraph spanned_subgraph(const Graph& g, const PathWord& p) {
  Subgraph s = Subgraph::single(p.start());
  for (const Step& step : p.steps()) {
    const Edge& e = g.edge(step.edge);
    s.edges |= Mask{1} << step.edge.index;
    s.vertices |= (Mask{1} << e.src.index) | (Mask{1} << e.dst.index);
  }
  return s;
}

PathWord parse_path_text(const Graph& g, VertexId start, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Step> steps;
  std::string tok;
  while (in >> tok) {
    std::int8_t sign = 1;
    if (tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
    }
    auto e = g.find_edge(tok);
    if (!e) throw DomainError("unknown edge '" + tok + "'");
    steps.push_back({*e, sign});
  }
  return parse_path(g, start, std::move(steps));
}

std::string format_path(const Graph& g, const PathWord& p) {
  std::string out;
  for (const Step& s : p.steps()) {
    if (!out.empty()) out += ' ';
    out += g.edge_name(s.edge);
    if (s.sign < 0) out += '\'';
  }
  return out;
}

}  // namespace bpe
