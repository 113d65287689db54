#include "bpe/variety.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>

#include "bpe/error.hpp"

namespace bpe {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// BFS spanning tree of the component of `root` inside `allowed_edges`.
struct SpanningTree {
  std::vector<std::int32_t> parent_edge;  // -1 for the root and unreached vertices
  std::vector<std::uint32_t> order;       // BFS order, root first
  std::vector<bool> reached;
};

SpanningTree spanning_tree(const Graph& g, VertexId root, Mask allowed_edges) {
  SpanningTree t;
  t.parent_edge.assign(g.vertex_count(), -1);
  t.reached.assign(g.vertex_count(), false);
  t.reached[root.index] = true;
  t.order.push_back(root.index);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    std::uint32_t v = t.order[head];
    for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
      if (!((allowed_edges >> i) & 1U)) continue;
      const Edge& e = g.edges()[i];
      std::uint32_t w;
      if (e.src.index == v) w = e.dst.index;
      else if (e.dst.index == v) w = e.src.index;
      else continue;
      if (t.reached[w]) continue;
      t.reached[w] = true;
      t.parent_edge[w] = static_cast<std::int32_t>(i);
      t.order.push_back(w);
    }
  }
  return t;
}

/// Tree-edge values whose boundary equals `demand` (mod n when n > 0).
/// Returns false if the demand is not balanced on the tree's component.
bool solve_on_tree(const Graph& g, const SpanningTree& t, std::vector<std::int64_t> demand,
                   std::int64_t n, std::vector<std::int64_t>& vec) {
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!t.reached[v] && (n > 0 ? mod(demand[v], n) : demand[v]) != 0) return false;
  }
  for (std::size_t k = t.order.size(); k-- > 1;) {
    std::uint32_t w = t.order[k];
    auto ei = static_cast<std::uint32_t>(t.parent_edge[w]);
    const Edge& e = g.edges()[ei];
    std::int64_t val;
    std::uint32_t parent;
    if (e.dst.index == w) {
      val = demand[w];
      parent = e.src.index;
      demand[parent] += val;
    } else {
      val = -demand[w];
      parent = e.dst.index;
      demand[parent] -= val;
    }
    if (n > 0) {
      val = mod(val, n);
      demand[parent] = mod(demand[parent], n);
    }
    vec[ei] += val;
    if (n > 0) vec[ei] = mod(vec[ei], n);
    demand[w] = 0;
  }
  std::int64_t root_left = demand[t.order.front()];
  return (n > 0 ? mod(root_left, n) : root_left) == 0;
}

std::vector<std::int64_t> endpoint_demand(const Graph& g, VertexId src, VertexId dst) {
  std::vector<std::int64_t> d(g.vertex_count(), 0);
  d[dst.index] += 1;
  d[src.index] -= 1;
  return d;
}

void require_same_variety(const ArrowValue& x, const ArrowValue& y) {
  if (!(x.variety() == y.variety()))
    throw CompositionError("cannot compose arrows of different varieties");
  if (x.vec().size() != y.vec().size())
    throw CompositionError("cannot compose arrows over different edge sets");
}

/// Integer vector congruent to x with boundary exactly dst − src; x must be realizable.
std::vector<std::int64_t> integer_lift(const Graph& g, const ArrowValue& x) {
  std::vector<std::int64_t> z(x.vec().begin(), x.vec().end());
  if (x.variety().kind != VarietySpec::Kind::ab_exp) return z;
  const auto n = static_cast<std::int64_t>(x.variety().exponent);
  for (auto& c : z) {
    if (c > n / 2) c -= n;
  }
  auto b = boundary(g, z);
  auto demand = endpoint_demand(g, x.src(), x.dst());
  for (std::size_t v = 0; v < demand.size(); ++v) demand[v] -= b[v];
  SpanningTree t = spanning_tree(g, x.src(), g.all_edges());
  std::vector<std::int64_t> fix(g.edge_count(), 0);
  if (!solve_on_tree(g, t, demand, 0, fix)) throw DomainError("value is not realizable");
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += fix[i];
  return z;
}

}  // namespace

VarietySpec VarietySpec::ab_exp(std::uint32_t n) {
  if (n < 2) throw DomainError("ab:N requires N >= 2");
  return {Kind::ab_exp, n};
}

std::string VarietySpec::to_string() const {
  switch (kind) {
    case Kind::trivial:
      return "trivial";
    case Kind::ab_free:
      return "ab";
    case Kind::ab_exp:
      return "ab:" + std::to_string(exponent);
  }
  return {};
}

VarietySpec parse_variety(std::string_view text) {
  if (text == "trivial") return VarietySpec::trivial();
  if (text == "ab") return VarietySpec::ab_free();
  if (text.starts_with("ab:")) {
    std::string_view digits = text.substr(3);
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() && n >= 2)
      return VarietySpec::ab_exp(n);
  }
  throw DomainError("unknown variety '" + std::string(text) +
                    "' (expected trivial, ab or ab:N with N >= 2)");
}

std::vector<std::int64_t> boundary(const Graph& g, std::span<const std::int64_t> vec) {
  std::vector<std::int64_t> b(g.vertex_count(), 0);
  for (std::size_t i = 0; i < vec.size() && i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    b[e.dst.index] += vec[i];
    b[e.src.index] -= vec[i];
  }
  return b;
}

ArrowValue ArrowValue::make(const Graph& g, VarietySpec u, VertexId src, VertexId dst,
                            std::vector<std::int64_t> vec) {
  if (u.kind == VarietySpec::Kind::ab_exp) {
    for (auto& c : vec) c = mod(c, u.exponent);
  }
  ArrowValue x(u, src, dst, std::move(vec));
  if (!x.valid_for(g)) {
    g.check(src);
    g.check(dst);
    if (u.kind == VarietySpec::Kind::trivial && !x.vec_.empty())
      throw DomainError("trivial-variety arrows carry no exponent vector");
    if (u.is_abelian() && x.vec_.size() != g.edge_count())
      throw DomainError("exponent vector length does not match edge count");
    throw DomainError("exponent vector violates the boundary condition for " +
                      g.vertex_name(src) + "->" + g.vertex_name(dst));
  }
  return x;
}

ArrowValue ArrowValue::unchecked(VarietySpec u, VertexId src, VertexId dst,
                                 std::vector<std::int64_t> vec) {
  return ArrowValue(u, src, dst, std::move(vec));
}

ArrowValue ArrowValue::identity(const Graph& g, VarietySpec u, VertexId v) {
  g.check(v);
  std::vector<std::int64_t> vec;
  if (u.is_abelian()) vec.assign(g.edge_count(), 0);
  return ArrowValue(u, v, v, std::move(vec));
}

Mask ArrowValue::support() const {
  Mask m = 0;
  for (std::size_t i = 0; i < vec_.size(); ++i) {
    if (vec_[i] != 0) m |= Mask{1} << i;
  }
  return m;
}

bool ArrowValue::valid_for(const Graph& g) const {
  if (src_.index >= g.vertex_count() || dst_.index >= g.vertex_count()) return false;
  if (variety_.kind == VarietySpec::Kind::trivial) return vec_.empty();
  if (vec_.size() != g.edge_count()) return false;
  if (variety_.kind == VarietySpec::Kind::ab_exp) {
    if (variety_.exponent < 2) return false;
    for (auto c : vec_) {
      if (c < 0 || c >= static_cast<std::int64_t>(variety_.exponent)) return false;
    }
  }
  auto b = boundary(g, vec_);
  auto want = endpoint_demand(g, src_, dst_);
  for (std::size_t v = 0; v < b.size(); ++v) {
    std::int64_t diff = b[v] - want[v];
    if (variety_.kind == VarietySpec::Kind::ab_exp) diff = mod(diff, variety_.exponent);
    if (diff != 0) return false;
  }
  return true;
}

std::uint64_t ArrowValue::code() const {
  if (variety_.kind == VarietySpec::Kind::trivial) return 0;
  if (variety_.kind == VarietySpec::Kind::ab_free)
    throw UnsupportedVariety("integer arrow values have no finite code");
  std::uint64_t c = 0;
  for (std::size_t i = vec_.size(); i-- > 0;) c = c * variety_.exponent + vec_[i];
  return c;
}

bool canonical_less(const ArrowValue& x, const ArrowValue& y) {
  if (x.src() != y.src()) return x.src() < y.src();
  if (x.dst() != y.dst()) return x.dst() < y.dst();
  auto a = x.vec();
  auto b = y.vec();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

ArrowValue value_of_path(const Graph& g, VarietySpec u, const PathWord& p) {
  std::vector<std::int64_t> vec;
  if (u.is_abelian()) {
    vec.assign(g.edge_count(), 0);
    for (const Step& s : p.steps()) vec.at(s.edge.index) += s.sign;
  }
  return ArrowValue::make(g, u, p.start(), p.end(), std::move(vec));
}

ArrowValue compose_values(const ArrowValue& x, const ArrowValue& y) {
  require_same_variety(x, y);
  if (x.dst() != y.src())
    throw CompositionError("cannot compose: first arrow ends at vertex " +
                           std::to_string(x.dst().index) + ", second starts at " +
                           std::to_string(y.src().index));
  std::vector<std::int64_t> vec(x.vec().begin(), x.vec().end());
  const auto n = static_cast<std::int64_t>(x.variety().exponent);
  for (std::size_t i = 0; i < vec.size(); ++i) {
    vec[i] += y.vec()[i];
    if (x.variety().kind == VarietySpec::Kind::ab_exp) vec[i] = mod(vec[i], n);
  }
  return ArrowValue::unchecked(x.variety(), x.src(), y.dst(), std::move(vec));
}

ArrowValue invert_value(const ArrowValue& x) {
  std::vector<std::int64_t> vec(x.vec().begin(), x.vec().end());
  const auto n = static_cast<std::int64_t>(x.variety().exponent);
  for (auto& c : vec) {
    c = -c;
    if (x.variety().kind == VarietySpec::Kind::ab_exp) c = mod(c, n);
  }
  return ArrowValue::unchecked(x.variety(), x.dst(), x.src(), std::move(vec));
}

std::uint64_t value_count(const Graph& g, VarietySpec u) {
  if (!u.locally_finite()) throw UnsupportedVariety("ab has infinitely many arrows");
  std::uint64_t count = g.vertex_count() * g.vertex_count();
  if (u.kind == VarietySpec::Kind::ab_exp) {
    std::size_t cycle_rank = g.edge_count() + 1 - g.vertex_count();
    for (std::size_t i = 0; i < cycle_rank; ++i) {
      if (count > std::numeric_limits<std::uint64_t>::max() / u.exponent)
        throw BudgetError("arrow count overflows");
      count *= u.exponent;
    }
  }
  return count;
}

std::vector<ArrowValue> enumerate_values(const Graph& g, VarietySpec u) {
  if (!u.locally_finite())
    throw UnsupportedVariety("cannot enumerate arrows over ab (use a certificate instead)");
  if (!is_connected(g)) throw DomainError("graph is not connected");
  std::vector<ArrowValue> out;
  out.reserve(value_count(g, u));
  const std::uint32_t nv = static_cast<std::uint32_t>(g.vertex_count());
  if (u.kind == VarietySpec::Kind::trivial) {
    for (std::uint32_t s = 0; s < nv; ++s)
      for (std::uint32_t d = 0; d < nv; ++d)
        out.push_back(ArrowValue::unchecked(u, VertexId{s}, VertexId{d}, {}));
    return out;
  }

  const auto n = static_cast<std::int64_t>(u.exponent);
  SpanningTree tree = spanning_tree(g, VertexId{0}, g.all_edges());
  std::vector<std::uint32_t> free_edges;
  std::vector<bool> in_tree(g.edge_count(), false);
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (tree.parent_edge[v] >= 0) in_tree[static_cast<std::size_t>(tree.parent_edge[v])] = true;
  }
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    if (!in_tree[i]) free_edges.push_back(i);
  }

  for (std::uint32_t s = 0; s < nv; ++s) {
    for (std::uint32_t d = 0; d < nv; ++d) {
      std::vector<std::int64_t> digits(free_edges.size(), 0);
      while (true) {
        std::vector<std::int64_t> vec(g.edge_count(), 0);
        for (std::size_t k = 0; k < free_edges.size(); ++k) vec[free_edges[k]] = digits[k];
        auto b = boundary(g, vec);
        auto demand = endpoint_demand(g, VertexId{s}, VertexId{d});
        for (std::size_t v = 0; v < nv; ++v) demand[v] = mod(demand[v] - b[v], n);
        solve_on_tree(g, tree, demand, n, vec);
        out.push_back(ArrowValue::unchecked(u, VertexId{s}, VertexId{d}, std::move(vec)));
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
        if (k == digits.size()) break;
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool realizable_in(const Graph& g, const Subgraph& allowed, const ArrowValue& x) {
  if (!is_closed(g, allowed)) throw DomainError("allowed subgraph is not closed in the graph");
  if (!x.valid_for(g)) throw DomainError("arrow value is not valid for the graph");
  if (!allowed.contains(x.src()) || !allowed.contains(x.dst())) return false;
  const Mask support = x.support();
  if ((support & ~allowed.edges) != 0) return false;
  Subgraph comp = component_of(g, allowed, x.src());
  return comp.contains(x.dst()) && (support & ~comp.edges) == 0;
}

PathWord realize_value(const Graph& g, const ArrowValue& x) {
  if (!realizable_in(g, Subgraph::whole(g), x)) throw DomainError("value is not realizable");
  const std::size_t nv = g.vertex_count();

  if (x.variety().kind == VarietySpec::Kind::trivial) {
    SpanningTree t = spanning_tree(g, x.src(), g.all_edges());
    std::vector<Step> rev;
    for (std::uint32_t v = x.dst().index; v != x.src().index;) {
      auto ei = static_cast<std::uint32_t>(t.parent_edge[v]);
      const Edge& e = g.edges()[ei];
      bool forward = e.dst.index == v;
      rev.push_back({EdgeId{ei}, static_cast<std::int8_t>(forward ? 1 : -1)});
      v = forward ? e.src.index : e.dst.index;
    }
    return parse_path(g, x.src(), {rev.rbegin(), rev.rend()});
  }

  std::vector<std::int64_t> z = integer_lift(g, x);

  struct Dart {
    std::uint32_t from, to;
    Step step;
  };
  std::vector<Dart> darts;
  auto add_dart = [&](std::uint32_t ei, std::int8_t sign) {
    Step s{EdgeId{ei}, sign};
    darts.push_back({step_source(g, s).index, step_target(g, s).index, s});
  };
  for (std::uint32_t i = 0; i < z.size(); ++i) {
    for (std::int64_t k = 0; k < (z[i] < 0 ? -z[i] : z[i]); ++k)
      add_dart(i, static_cast<std::int8_t>(z[i] > 0 ? 1 : -1));
  }

  // Join every touched vertex to src with back-and-forth pairs along the tree.
  std::vector<std::uint32_t> uf(nv);
  for (std::uint32_t v = 0; v < nv; ++v) uf[v] = v;
  auto find = [&](std::uint32_t v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  std::vector<bool> terminal(nv, false);
  terminal[x.src().index] = terminal[x.dst().index] = true;
  for (const Dart& d : darts) {
    terminal[d.from] = terminal[d.to] = true;
    uf[find(d.from)] = find(d.to);
  }
  SpanningTree t = spanning_tree(g, x.src(), g.all_edges());
  std::vector<bool> needed(nv, false);  // subtree below v contains a terminal
  for (std::size_t k = t.order.size(); k-- > 0;) {
    std::uint32_t v = t.order[k];
    if (terminal[v]) needed[v] = true;
    if (needed[v] && t.parent_edge[v] >= 0) {
      const Edge& e = g.edges()[static_cast<std::size_t>(t.parent_edge[v])];
      needed[e.src.index == v ? e.dst.index : e.src.index] = true;
    }
  }
  for (std::uint32_t v : t.order) {
    if (!needed[v] || t.parent_edge[v] < 0) continue;
    auto ei = static_cast<std::uint32_t>(t.parent_edge[v]);
    const Edge& e = g.edges()[ei];
    if (find(e.src.index) == find(e.dst.index)) continue;
    add_dart(ei, 1);
    add_dart(ei, -1);
    uf[find(e.src.index)] = find(e.dst.index);
  }

  // Hierholzer: Eulerian trail from src over the directed dart multiset.
  std::vector<std::vector<std::uint32_t>> out(nv);
  for (std::uint32_t i = 0; i < darts.size(); ++i) out[darts[i].from].push_back(i);
  std::vector<std::size_t> next(nv, 0);
  std::vector<std::pair<std::uint32_t, std::int64_t>> stack{{x.src().index, -1}};
  std::vector<Step> trail;
  while (!stack.empty()) {
    std::uint32_t v = stack.back().first;
    if (next[v] < out[v].size()) {
      std::uint32_t di = out[v][next[v]++];
      stack.emplace_back(darts[di].to, di);
    } else {
      if (stack.back().second >= 0) trail.push_back(darts[static_cast<std::size_t>(stack.back().second)].step);
      stack.pop_back();
    }
  }
  std::reverse(trail.begin(), trail.end());
  PathWord p = parse_path(g, x.src(), std::move(trail));
  if (p.size() != darts.size() || p.end() != x.dst())
    throw DomainError("internal: trail construction failed");
  return p;
}

ArrowValue lift_to_free(const Graph& g, const ArrowValue& x) {
  if (x.variety().kind == VarietySpec::Kind::ab_free) return x;
  if (x.variety().kind != VarietySpec::Kind::ab_exp)
    throw UnsupportedVariety("only ab:N values can be lifted");
  if (!realizable_in(g, Subgraph::whole(g), x)) throw DomainError("value is not realizable");
  return ArrowValue::make(g, VarietySpec::ab_free(), x.src(), x.dst(), integer_lift(g, x));
}

std::string format_value(const Graph& g, const ArrowValue& x) {
  std::string out = g.vertex_name(x.src()) + "->" + g.vertex_name(x.dst()) + "[";
  bool first = true;
  for (std::uint32_t i = 0; i < x.vec().size(); ++i) {
    if (x.vec()[i] == 0) continue;
    if (!first) out += ',';
    first = false;
    out += g.edge_name(EdgeId{i}) + ":" + std::to_string(x.vec()[i]);
  }
  return out + "]";
}

}  // namespace bpe
