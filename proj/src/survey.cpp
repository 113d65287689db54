#include "bpe/survey.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bpe/budget.hpp"
#include "bpe/error.hpp"
#include "bpe/fixpoint.hpp"

namespace bpe {

namespace {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::string encode(std::size_t n, const Pairs& pairs) {
  std::string out = std::to_string(n) + "|";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pairs[i].first) + "-" + std::to_string(pairs[i].second);
  }
  return out;
}

Pairs canonical_pairs(std::size_t n, const Pairs& pairs) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  Pairs best;
  bool have = false;
  do {
    Pairs mapped;
    mapped.reserve(pairs.size());
    for (auto [a, b] : pairs) mapped.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
    std::sort(mapped.begin(), mapped.end());
    if (!have || mapped < best) {
      best = std::move(mapped);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph graph_from_pairs(std::size_t n, const Pairs& pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({VertexId{a}, VertexId{b}});
  return Graph(n, std::move(edges));
}

}  // namespace

std::string canonical_code(const Graph& g) {
  Pairs pairs;
  for (const Edge& e : g.edges())
    pairs.emplace_back(std::min(e.src.index, e.dst.index), std::max(e.src.index, e.dst.index));
  return encode(g.vertex_count(), canonical_pairs(g.vertex_count(), pairs));
}

Graph graph_from_code(const std::string& code) {
  auto bar = code.find('|');
  if (bar == std::string::npos) throw DomainError("bad graph code: " + code);
  std::size_t n = std::stoul(code.substr(0, bar));
  Pairs pairs;
  std::stringstream rest(code.substr(bar + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw DomainError("bad graph code: " + code);
    pairs.emplace_back(std::stoul(item.substr(0, dash)), std::stoul(item.substr(dash + 1)));
  }
  for (auto [a, b] : pairs)
    if (a >= n || b >= n) throw DomainError("bad graph code: " + code);
  return graph_from_pairs(n, pairs);
}

std::vector<Graph> enumerate_connected_multigraphs(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    Pairs all;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a; b < n; ++b) all.emplace_back(a, b);
    std::set<Pairs> seen_sorted;
    std::vector<std::pair<std::size_t, Pairs>> found;  // (edges, canonical)
    Pairs cur;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (cur.size() + 1 >= n) {
        Graph g = graph_from_pairs(n, cur);
        if (is_connected(g)) {
          Pairs c = canonical_pairs(n, cur);
          if (seen_sorted.insert(c).second) found.emplace_back(c.size(), c);
        }
      }
      if (cur.size() == max_edges) return;
      for (std::size_t i = from; i < all.size(); ++i) {
        cur.push_back(all[i]);
        grow(i);
        cur.pop_back();
      }
    };
    grow(0);
    std::sort(found.begin(), found.end());
    for (auto& [m, pairs] : found) out.push_back(graph_from_pairs(n, pairs));
  }
  return out;
}

SurveyReport run_survey(std::size_t max_vertices, std::size_t max_edges,
                        const std::vector<VarietySpec>& varieties,
                        const std::function<void(std::size_t, std::size_t)>& progress) {
  const Budget& budget = Budget::current();
  if (max_vertices > budget.survey_max_vertices || max_edges > budget.survey_max_edges)
    throw BudgetError("survey limited to " + std::to_string(budget.survey_max_vertices) + " vertices and " +
                      std::to_string(budget.survey_max_edges) + " edges");
  for (const VarietySpec& u : varieties)
    if (!u.locally_finite()) throw UnsupportedVariety("survey needs trivial or ab:N varieties");

  SurveyReport report;
  report.max_vertices = max_vertices;
  report.max_edges = max_edges;
  report.varieties = varieties;
  std::vector<Graph> graphs = enumerate_connected_multigraphs(max_vertices, max_edges);
  std::map<std::string, std::size_t> by_code;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    SurveyRecord r;
    r.graph = graphs[i];
    r.code = canonical_code(r.graph);
    for (const VarietySpec& u : varieties) r.breaking.push_back(!decide_T(r.graph, u).holds());
    r.structure = has_forbidden_minor(r.graph);
    r.tree_with_loops = is_tree_with_loops(r.graph);
    const bool forbidden = r.structure.tag == StructureClass::Tag::contains_forbidden;
    for (std::size_t k = 0; k < varieties.size(); ++k) {
      const bool predicted = varieties[k].is_abelian() ? forbidden : !r.tree_with_loops;
      if (predicted != r.breaking[k]) r.agrees = false;
    }
    report.disagreements += r.agrees ? 0 : 1;
    by_code[r.code] = i;
    report.records.push_back(std::move(r));
    if (progress) progress(i + 1, graphs.size());
  }

  // A breaking graph is minimal when no proper minor (reached through chains
  // of one-step minors) breaks.
  for (std::size_t k = 0; k < varieties.size(); ++k) {
    std::map<std::string, bool> memo;  // code → some proper minor breaks
    std::function<bool(const std::string&)> below = [&](const std::string& code) {
      if (auto it = memo.find(code); it != memo.end()) return it->second;
      bool any = false;
      for (const Graph& m : one_step_minors(report.records[by_code.at(code)].graph)) {
        const std::string mc = canonical_code(m);
        auto it = by_code.find(mc);
        if (it == by_code.end()) throw std::logic_error("minor outside the surveyed range: " + mc);
        if (report.records[it->second].breaking[k] || below(mc)) {
          any = true;
          break;
        }
      }
      return memo[code] = any;
    };
    std::vector<std::string> minimal;
    for (const SurveyRecord& r : report.records)
      if (r.breaking[k] && !below(r.code)) minimal.push_back(r.code);
    report.minimal_breaking.push_back(std::move(minimal));
  }
  return report;
}

}  // namespace bpe
