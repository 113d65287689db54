#include "bpe/fixpoint.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "bpe/budget.hpp"
#include "bpe/content.hpp"
#include "bpe/error.hpp"

namespace bpe {

namespace {
constexpr std::size_t kComposeTableLimit = std::size_t{1} << 23;
}

std::optional<std::size_t> ArrowTable::lookup(std::uint32_t src, std::uint32_t dst,
                                              std::uint64_t code) const {
  const auto& block = shape_->blocks[src * shape_->graph.vertex_count() + dst];
  auto it = std::lower_bound(block.begin(), block.end(), std::make_pair(code, std::uint32_t{0}));
  if (it == block.end() || it->first != code) return std::nullopt;
  return it->second;
}

std::uint64_t ArrowTable::composed_code(std::size_t i, std::size_t j) const {
  const VarietySpec u = shape_->variety;
  if (u.kind == VarietySpec::Kind::trivial) return 0;
  auto a = shape_->arrows[i].vec();
  auto b = shape_->arrows[j].vec();
  const auto n = static_cast<std::uint64_t>(u.exponent);
  std::uint64_t c = 0;
  for (std::size_t e = a.size(); e-- > 0;)
    c = c * n + static_cast<std::uint64_t>(a[e] + b[e]) % n;
  return c;
}

std::optional<std::size_t> ArrowTable::index_of(const ArrowValue& x) const {
  if (!(x.variety() == shape_->variety) || !x.valid_for(shape_->graph)) return std::nullopt;
  return lookup(x.src().index, x.dst().index, x.code());
}

std::optional<std::size_t> ArrowTable::compose(std::size_t i, std::size_t j) const {
  const ArrowValue& x = shape_->arrows.at(i);
  const ArrowValue& y = shape_->arrows.at(j);
  if (x.dst() != y.src()) return std::nullopt;
  if (!shape_->compose_table.empty()) {
    const auto& row = shape_->by_src[y.src().index];
    auto k = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(j)) - row.begin();
    return shape_->compose_table[i][static_cast<std::size_t>(k)];
  }
  return lookup(x.src().index, y.dst().index, composed_code(i, j));
}

std::size_t ArrowTable::inverse(std::size_t i) const { return shape_->inverse.at(i); }

ArrowTable ArrowTable::with_subgraphs(std::vector<Subgraph> c, std::vector<Subgraph> p,
                                      int level) const {
  if (c.size() != size() || p.size() != size())
    throw DomainError("subgraph assignment does not match the arrow count");
  ArrowTable t;
  t.shape_ = shape_;
  t.c_ = std::move(c);
  t.p_ = std::move(p);
  t.level_ = level;
  return t;
}

ArrowTable enumerate_arrows(const Graph& g, VarietySpec u) {
  if (!u.locally_finite())
    throw UnsupportedVariety("the fixpoint engine needs a locally finite variety (trivial or ab:N)");
  if (!is_connected(g)) throw DomainError("graph is not connected");
  const std::uint64_t count = value_count(g, u);
  if (count > Budget::current().max_arrows)
    throw BudgetError(std::to_string(count) + " arrows exceed the budget of " +
                      std::to_string(Budget::current().max_arrows));

  auto shape = std::make_shared<ArrowTable::Shape>();
  shape->graph = g;
  shape->variety = u;
  shape->arrows = enumerate_values(g, u);
  const std::size_t nv = g.vertex_count();
  const std::size_t n = shape->arrows.size();
  shape->by_src.assign(nv, {});
  shape->by_dst.assign(nv, {});
  shape->blocks.assign(nv * nv, {});
  shape->codes.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const ArrowValue& x = shape->arrows[i];
    shape->codes.push_back(x.code());
    shape->by_src[x.src().index].push_back(i);
    shape->by_dst[x.dst().index].push_back(i);
    shape->blocks[x.src().index * nv + x.dst().index].emplace_back(shape->codes.back(), i);
  }

  ArrowTable t;
  t.shape_ = shape;
  shape->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    shape->inverse[i] = static_cast<std::uint32_t>(*t.index_of(invert_value(shape->arrows[i])));

  std::size_t table_size = 0;
  for (std::size_t v = 0; v < nv; ++v) table_size += shape->by_src[v].size() * shape->by_dst[v].size();
  if (table_size <= kComposeTableLimit) {
    std::vector<std::vector<std::uint32_t>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = shape->by_src[shape->arrows[i].dst().index];
      table[i].reserve(row.size());
      for (std::uint32_t j : row) table[i].push_back(static_cast<std::uint32_t>(*t.compose(i, j)));
    }
    shape->compose_table = std::move(table);
  }

  std::vector<Subgraph> c(n), p(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = c0_exact(g, shape->arrows[i]);
    p[i] = component_of(g, c[i], shape->arrows[i].src());
  }
  t.c_ = std::move(c);
  t.p_ = std::move(p);
  t.level_ = 0;
  return t;
}

std::vector<bool> avoidance_closure(const ArrowTable& t, Atom atom) {
  const std::size_t n = t.size();
  const std::size_t nv = t.graph().vertex_count();
  std::vector<bool> in(n, false);
  std::vector<std::vector<std::uint32_t>> by_src(nv), by_dst(nv);
  std::vector<std::uint32_t> queue;
  auto add = [&](std::size_t i) {
    if (in[i]) return;
    in[i] = true;
    const ArrowValue& x = t.arrow(i);
    by_src[x.src().index].push_back(static_cast<std::uint32_t>(i));
    by_dst[x.dst().index].push_back(static_cast<std::uint32_t>(i));
    queue.push_back(static_cast<std::uint32_t>(i));
  };
  auto p = t.p_current();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p[i].contains(atom)) add(i);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t y = queue[head];
    const ArrowValue& x = t.arrow(y);
    // Lists may grow while iterating; index-based loops see the new members.
    auto& after = by_src[x.dst().index];
    for (std::size_t k = 0; k < after.size(); ++k) add(*t.compose(y, after[k]));
    auto& before = by_dst[x.src().index];
    for (std::size_t k = 0; k < before.size(); ++k) add(*t.compose(before[k], y));
  }
  return in;
}

ArrowTable fixpoint_step(const ArrowTable& t) {
  const std::size_t n = t.size();
  const Graph& g = t.graph();
  std::vector<Subgraph> c(n);
  auto p = t.p_current();
  Subgraph anywhere;
  for (const auto& s : p) anywhere |= s;
  for (const Atom& a : atoms(g)) {
    if (!anywhere.contains(a)) continue;
    std::vector<bool> closure = avoidance_closure(t, a);
    for (std::size_t i = 0; i < n; ++i) {
      if (closure[i]) continue;
      if (a.kind == Atom::Kind::vertex) c[i].vertices |= Mask{1} << a.index;
      else c[i].edges |= Mask{1} << a.index;
    }
  }
  std::vector<Subgraph> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!c[i].subset_of(p[i]) || !c[i].contains(t.arrow(i).src()))
      throw std::logic_error("fixpoint step broke the chain C_{n+1} ⊆ P_n");
    next[i] = component_of(g, c[i], t.arrow(i).src());
  }
  return t.with_subgraphs(std::move(c), std::move(next), t.level() + 1);
}

ArrowTable fixpoint_run(const ArrowTable& t, std::vector<TraceEntry>* trace) {
  if (trace) {
    for (std::size_t i = 0; i < t.size(); ++i)
      trace->push_back({t.level(), i, t.c_current()[i], t.p_current()[i]});
  }
  ArrowTable cur = t;
  while (true) {
    ArrowTable next = fixpoint_step(cur);
    bool changed = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (next.p_current()[i] == cur.p_current()[i]) continue;
      changed = true;
      if (trace) trace->push_back({next.level(), i, next.c_current()[i], next.p_current()[i]});
    }
    if (!changed) return cur;
    cur = std::move(next);
  }
}

Verdict decide_T(const Graph& g, VarietySpec u) {
  ArrowTable start = enumerate_arrows(g, u);
  std::vector<TraceEntry> trace;
  ArrowTable fixed = fixpoint_run(start, &trace);
  Verdict v{fixed, std::move(trace), std::nullopt};
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const ArrowValue& x = fixed.arrow(i);
    if (fixed.p_current()[i].contains(x.dst())) continue;
    int level = fixed.level();
    for (const TraceEntry& e : v.trace) {
      if (e.arrow == i && !e.p.contains(x.dst())) {
        level = e.level;
        break;
      }
    }
    v.breaking = BreakingWitness{i, realize_value(g, x), level};
    break;
  }
  return v;
}

bool premorphism_check(const ArrowTable& t) {
  const Graph& g = t.graph();
  auto p = t.p_current();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Subgraph& s = p[i];
    if (!s.contains(t.arrow(i).src()) || !is_closed(g, s) || !is_connected(g, s)) return false;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!p[i].contains(t.arrow(i).dst()))
      throw DomainError("table has a breaking arrow; no premorphism to check");
  }
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    PathWord step = parse_path(g, g.edges()[e].src, {{EdgeId{e}, 1}});
    ArrowValue x = value_of_path(g, t.variety(), step);
    // Under the trivial variety a loop is the identity arrow and has no edge image.
    if (x.is_identity()) continue;
    auto idx = t.index_of(x);
    if (!idx || !(p[*idx] == spanned_subgraph(g, step))) return false;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::uint32_t j : t.starting_at(t.arrow(i).dst())) {
      std::size_t k = *t.compose(i, j);
      if (!p[k].subset_of(p[i] | p[j])) return false;
    }
  }
  return true;
}

std::string format_subgraph(const Graph& g, const Subgraph& s) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!s.contains(VertexId{v})) continue;
    if (!first) out += ',';
    first = false;
    out += g.vertex_name(VertexId{v});
  }
  out += ';';
  first = true;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (!s.contains(EdgeId{e})) continue;
    if (!first) out += ',';
    first = false;
    out += g.edge_name(EdgeId{e});
  }
  return out + "}";
}

void write_trace(std::ostream& out, const Verdict& v) {
  const Graph& g = v.table.graph();
  for (const TraceEntry& e : v.trace) {
    out << "n=" << e.level << " arrow=" << format_value(g, v.table.arrow(e.arrow))
        << " P=" << format_subgraph(g, e.p) << '\n';
  }
  if (v.holds()) {
    out << "VERDICT holds\n";
  } else {
    out << "VERDICT breaking witness=" << format_path(g, v.breaking->path)
        << " level=" << v.breaking->level_found << '\n';
  }
}

}  // namespace bpe
