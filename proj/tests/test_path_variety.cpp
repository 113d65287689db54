#include <doctest.h>

#include "bpe/error.hpp"
#include "bpe/fixtures.hpp"
#include "bpe/path.hpp"
#include "bpe/variety.hpp"
#include "support.hpp"

using namespace bpe;
using namespace bpe::testing;

namespace {

const VarietySpec kVarieties[] = {VarietySpec::trivial(), VarietySpec::ab_exp(2), VarietySpec::ab_exp(3),
                                  VarietySpec::ab_free()};

// Exponent sums straight from the word.
std::vector<std::int64_t> exponent_sums(const Graph& g, const PathWord& p) {
  std::vector<std::int64_t> v(g.edge_count(), 0);
  for (const Step& s : p.steps()) v[s.edge.index] += s.sign;
  return v;
}

}  // namespace

TEST_CASE("path text") {
  Graph g = fixtures::theta3();
  VertexId w = *g.find_vertex("w");
  PathWord p = parse_path_text(g, w, "c a b' c'");
  CHECK(p.size() == 4);
  CHECK(p.end() == w);
  CHECK(format_path(g, p) == "c a b' c'");
  CHECK(parse_path_text(g, w, "").empty());

  try {
    parse_path_text(g, w, "c b' a");
    FAIL("expected ValidityError");
  } catch (const ValidityError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_path_text(g, w, "c zz"), DomainError);
  CHECK_THROWS_AS(parse_path(g, w, {{EdgeId{9}, 1}}), DomainError);
}

TEST_CASE("words are not reduced") {
  Graph g = fixtures::theta3();
  PathWord p = parse_path_text(g, VertexId{0}, "a a'");
  CHECK(p.size() == 2);
  CHECK(spanned_subgraph(g, p) == Subgraph{0b011, 0b0001});
  CHECK(spanned_subgraph(g, PathWord::empty_at(VertexId{2})) == Subgraph::single(VertexId{2}));
}

TEST_CASE("property: inverse and concatenation") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_connected_graph(rng, 1 + pick(rng, 4), pick(rng, 6));
    VertexId s{static_cast<std::uint32_t>(pick(rng, g.vertex_count()))};
    PathWord p = random_walk(rng, g, s, pick(rng, 8));
    PathWord q = random_walk(rng, g, p.end(), pick(rng, 8));
    PathWord r = random_walk(rng, g, q.end(), pick(rng, 8));
    CHECK(inverse_path(inverse_path(p)) == p);
    CHECK(concat_paths(concat_paths(p, q), r) == concat_paths(p, concat_paths(q, r)));
    CHECK(inverse_path(concat_paths(p, q)) == concat_paths(inverse_path(q), inverse_path(p)));
    CHECK(concat_paths(PathWord::empty_at(p.start()), p) == p);
    CHECK(parse_path_text(g, p.start(), format_path(g, p)) == p);
    if (p.end() != r.end() || q.start() != p.start()) {
      if (p.end() != r.start()) CHECK_THROWS_AS(concat_paths(p, r), CompositionError);
    }

    for (VarietySpec u : kVarieties) {
      ArrowValue x = value_of_path(g, u, p), y = value_of_path(g, u, q);
      CHECK(value_of_path(g, u, concat_paths(p, q)) == compose_values(x, y));
      CHECK(value_of_path(g, u, inverse_path(p)) == invert_value(x));
      CHECK(x.valid_for(g));
      if (u.is_abelian()) {
        auto b = boundary(g, x.vec());
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
          std::int64_t want = (v == x.dst().index) - (v == x.src().index);
          if (u.kind == VarietySpec::Kind::ab_exp) {
            const std::int64_t n = u.exponent;
            CHECK(((b[v] - want) % n + n) % n == 0);
          } else {
            CHECK(b[v] == want);
          }
        }
        auto sums = exponent_sums(g, p);
        for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
          std::int64_t got = x.coefficient(EdgeId{e});
          if (u.kind == VarietySpec::Kind::ab_exp) CHECK(((sums[e] - got) % u.exponent) == 0);
          else CHECK(sums[e] == got);
        }
      } else {
        CHECK(x.vec().empty());
      }
    }
  }
}

TEST_CASE("variety strings") {
  CHECK(parse_variety("trivial") == VarietySpec::trivial());
  CHECK(parse_variety("ab") == VarietySpec::ab_free());
  CHECK(parse_variety("ab:7") == VarietySpec::ab_exp(7));
  CHECK(parse_variety("ab:7").to_string() == "ab:7");
  CHECK_THROWS_AS(parse_variety("ab:1"), DomainError);
  CHECK_THROWS_AS(parse_variety("ab:x"), DomainError);
  CHECK_THROWS_AS(parse_variety("nilpotent"), DomainError);
  CHECK_THROWS_AS(VarietySpec::ab_exp(0), DomainError);
}

TEST_CASE("checked construction") {
  Graph g = fixtures::theta3();
  auto u = VarietySpec::ab_exp(2);
  CHECK(ArrowValue::make(g, u, VertexId{0}, VertexId{1}, {3, 0, 0, 0}).coefficient(EdgeId{0}) == 1);
  CHECK_THROWS_AS(ArrowValue::make(g, u, VertexId{0}, VertexId{0}, {1, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(ArrowValue::make(g, u, VertexId{0}, VertexId{1}, {1, 0, 0}), DomainError);
  CHECK_THROWS_AS(ArrowValue::make(g, VarietySpec::ab_free(), VertexId{0}, VertexId{1}, {-1, 0, 0, 0}),
                  DomainError);
  CHECK(ArrowValue::make(g, VarietySpec::ab_free(), VertexId{0}, VertexId{0}, {1, -1, 0, 0}).valid_for(g));
  CHECK_THROWS_AS(ArrowValue::make(g, VarietySpec::trivial(), VertexId{0}, VertexId{5}, {}), DomainError);
  CHECK_THROWS_AS(compose_values(ArrowValue::identity(g, u, VertexId{0}), ArrowValue::identity(g, u, VertexId{1})),
                  CompositionError);
}

TEST_CASE("format value") {
  Graph g = fixtures::theta3();
  auto x = value_of_path(g, VarietySpec::ab_free(), parse_path_text(g, VertexId{0}, "a b'"));
  CHECK(format_value(g, x) == "u->u[a:1,b:-1]");
  CHECK(format_value(g, value_of_path(g, VarietySpec::trivial(), parse_path_text(g, VertexId{0}, "a"))) ==
        "u->v[]");
}

TEST_CASE("enumeration matches the count formula and is canonical") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected_graph(rng, 1 + pick(rng, 3), pick(rng, 5));
    for (VarietySpec u : {VarietySpec::trivial(), VarietySpec::ab_exp(2), VarietySpec::ab_exp(3)}) {
      auto all = enumerate_values(g, u);
      std::uint64_t beta = g.edge_count() + 1 - g.vertex_count();
      std::uint64_t expect = g.vertex_count() * g.vertex_count();
      if (u.is_abelian())
        for (std::uint64_t i = 0; i < beta; ++i) expect *= u.exponent;
      CHECK(all.size() == expect);
      CHECK(value_count(g, u) == expect);
      for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(canonical_less(all[i], all[i + 1]));
      for (const ArrowValue& x : all) CHECK(x.valid_for(g));
      // every random walk value is listed
      PathWord p = random_walk(rng, g, VertexId{0}, pick(rng, 10));
      CHECK(std::binary_search(all.begin(), all.end(), value_of_path(g, u, p), canonical_less));
    }
  }
}

TEST_CASE("property: composition laws on enumerated arrows") {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(rng, 1 + pick(rng, 3), pick(rng, 5));
    auto u = pick(rng, 2) ? VarietySpec::ab_exp(2) : VarietySpec::ab_exp(3);
    auto all = enumerate_values(g, u);
    for (int k = 0; k < 50; ++k) {
      const ArrowValue& x = all[pick(rng, all.size())];
      std::vector<ArrowValue> after;
      for (const auto& y : all)
        if (y.src() == x.dst()) after.push_back(y);
      const ArrowValue& y = after[pick(rng, after.size())];
      std::vector<ArrowValue> after2;
      for (const auto& z : all)
        if (z.src() == y.dst()) after2.push_back(z);
      const ArrowValue& z = after2[pick(rng, after2.size())];
      CHECK(compose_values(compose_values(x, y), z) == compose_values(x, compose_values(y, z)));
      CHECK(compose_values(x, invert_value(x)) == ArrowValue::identity(g, u, x.src()));
      CHECK(compose_values(ArrowValue::identity(g, u, x.src()), x) == x);
    }
  }
}

TEST_CASE("realize_value inverts value_of_path") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected_graph(rng, 1 + pick(rng, 4), pick(rng, 6));
    for (VarietySpec u : {VarietySpec::trivial(), VarietySpec::ab_exp(2), VarietySpec::ab_exp(3)}) {
      if (value_count(g, u) > 2000) continue;
      for (const ArrowValue& x : enumerate_values(g, u)) {
        PathWord p = realize_value(g, x);
        CHECK(p.start() == x.src());
        CHECK(value_of_path(g, u, p) == x);
        if (!u.is_abelian()) continue;
        ArrowValue lifted = lift_to_free(g, x);
        CHECK(lifted.valid_for(g));
        CHECK(value_of_path(g, VarietySpec::ab_free(), realize_value(g, lifted)) == lifted);
        for (std::uint32_t e = 0; e < g.edge_count(); ++e)
          CHECK((lifted.coefficient(EdgeId{e}) - x.coefficient(EdgeId{e})) % u.exponent == 0);
      }
    }
  }
}

TEST_CASE("realizable_in agrees with bounded enumeration") {
  Rng rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_connected_graph(rng, 1 + pick(rng, 3), pick(rng, 5));
    auto u = trial % 3 == 0 ? VarietySpec::trivial() : VarietySpec::ab_exp(2 + trial % 2);
    const std::size_t len = 3 * g.edge_count() + 4;
    for (int k = 0; k < 4; ++k) {
      Subgraph allowed = random_subgraph(rng, g);
      for (const ArrowValue& x : enumerate_values(g, u))
        CHECK(realizable_in(g, allowed, x) == oracle_realizable(g, allowed, x, len));
    }
  }
}
