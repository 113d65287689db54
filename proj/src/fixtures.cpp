#include "bpe/fixtures.hpp"

#include <charconv>

#include "bpe/error.hpp"

namespace bpe::fixtures {

namespace {

Edge E(std::uint32_t s, std::uint32_t d) { return {VertexId{s}, VertexId{d}}; }

std::vector<std::string> indices(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Graph theta3() {
  return Graph({"u", "v", "w"}, {"a", "b", "c", "d"}, {E(0, 1), E(0, 1), E(2, 0), E(1, 2)});
}

Graph digons2() {
  return Graph({"u", "v", "w"}, {"a", "b", "c", "d"}, {E(0, 1), E(0, 1), E(2, 0), E(2, 0)});
}

Graph bridgecyc() { return Graph(indices(3), {"e", "f", "g"}, {E(0, 1), E(1, 2), E(2, 1)}); }

Graph digon() { return Graph(indices(2), {"a", "b"}, {E(0, 1), E(0, 1)}); }

Graph loop1() { return Graph(indices(1), {"l"}, {E(0, 0)}); }

Graph cycle(std::size_t n) {
  if (n == 0) throw DomainError("cycle length must be positive");
  if (n == 1) return Graph(indices(1), {"e00"}, {E(0, 0)});
  if (n == 2) return Graph(indices(2), {"a", "b"}, {E(0, 1), E(1, 0)});
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    auto j = static_cast<std::uint32_t>((i + 1) % n);
    names.push_back("e" + std::to_string(i) + std::to_string(j));
    edges.push_back(E(i, j));
  }
  return Graph(indices(n), std::move(names), std::move(edges));
}

Graph path(std::size_t n) {
  if (n == 0) throw DomainError("path needs at least one vertex");
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    names.push_back("e" + std::to_string(i) + std::to_string(i + 1));
    edges.push_back(E(i, i + 1));
  }
  return Graph(indices(n), std::move(names), std::move(edges));
}

Graph decorated_cycle(std::size_t n) {
  Graph c = cycle(n);
  std::vector<std::string> vnames(c.vertex_names().begin(), c.vertex_names().end());
  std::vector<std::string> enames(c.edge_names().begin(), c.edge_names().end());
  std::vector<Edge> edges(c.edges().begin(), c.edges().end());
  auto t1 = static_cast<std::uint32_t>(n);
  auto t2 = static_cast<std::uint32_t>(n + 1);
  vnames.push_back("t1");
  vnames.push_back("t2");
  enames.insert(enames.end(), {"p1", "p2", "l1", "l0"});
  edges.insert(edges.end(), {E(0, t1), E(t1, t2), E(t2, t2), E(0, 0)});
  return Graph(std::move(vnames), std::move(enames), std::move(edges));
}

Graph parallel_edges(std::size_t count, std::size_t reversed) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back("p" + std::to_string(i));
    edges.push_back(i < reversed ? E(1, 0) : E(0, 1));
  }
  return Graph(indices(2), std::move(names), std::move(edges));
}

std::optional<Graph> by_name(std::string_view name) {
  if (name == "THETA3") return theta3();
  if (name == "DIGONS2") return digons2();
  if (name == "BRIDGECYC") return bridgecyc();
  if (name == "DIGON") return digon();
  if (name == "LOOP1") return loop1();
  auto numbered = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix)) return std::nullopt;
    std::string_view rest = name.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || n == 0 || n > 32) return std::nullopt;
    return n;
  };
  if (auto n = numbered("DECC")) return decorated_cycle(*n);
  if (auto n = numbered("C")) return cycle(*n);
  if (auto n = numbered("P")) return path(*n);
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"THETA3", "DIGONS2", "BRIDGECYC", "DIGON", "LOOP1", "C<n>", "P<n>", "DECC<n>"};
}

}  // namespace bpe::fixtures
