#include <doctest.h>

#include "bpe/certificate.hpp"
#include "bpe/dot.hpp"
#include "bpe/error.hpp"
#include "bpe/fixtures.hpp"
#include "bpe/io.hpp"
#include "bpe/survey.hpp"
#include "support.hpp"

using namespace bpe;
using namespace bpe::testing;

TEST_CASE("canonical codes identify exactly the isomorphic graphs") {
  Rng rng(41);
  std::vector<Graph> pool;
  for (int i = 0; i < 120; ++i) pool.push_back(random_graph(rng, 1 + pick(rng, 3), pick(rng, 5)));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CHECK(canonical_code(scramble(rng, pool[i])) == canonical_code(pool[i]));
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      CHECK((canonical_code(pool[i]) == canonical_code(pool[j])) == brute_isomorphic(pool[i], pool[j]));
  }
  CHECK(canonical_code(fixtures::theta3()) == "3|0-1,0-1,0-2,1-2");
  CHECK(isomorphic(graph_from_code(canonical_code(fixtures::digons2())), fixtures::digons2(), false));
  CHECK_THROWS_AS(graph_from_code("2|0-5"), DomainError);
  CHECK_THROWS_AS(graph_from_code("nonsense"), DomainError);
}

TEST_CASE("enumerated corpus is complete and free of duplicates") {
  auto corpus = enumerate_connected_multigraphs(3, 3);
  std::set<std::string> codes;
  for (const Graph& g : corpus) {
    CHECK(is_connected(g));
    CHECK(codes.insert(canonical_code(g)).second);
  }
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_connected_graph(rng, 1 + pick(rng, 3), pick(rng, 4));
    if (g.edge_count() > 3) continue;
    CHECK(codes.count(canonical_code(g)) == 1);
  }
  // one vertex: 0..3 loops; two vertices: multisets of size 1..3 over {00, 01, 11} containing 01
  std::size_t one = 0, two = 0;
  for (const Graph& g : corpus) {
    if (g.vertex_count() == 1) ++one;
    if (g.vertex_count() == 2) ++two;
  }
  CHECK(one == 4);
  CHECK(two == 1 + 2 + 4);  // {01}, {01,01},{01,00}, {01×3},{01×2,00},{01,00,00},{01,00,11}
}

TEST_CASE("small surveys") {
  SurveyReport r = run_survey(3, 4, {VarietySpec::ab_exp(2), VarietySpec::trivial()});
  CHECK(r.disagreements == 0);
  std::set<std::string> minimal(r.minimal_breaking[0].begin(), r.minimal_breaking[0].end());
  CHECK(minimal == std::set<std::string>{canonical_code(fixtures::theta3()), canonical_code(fixtures::digons2())});
  CHECK(r.minimal_breaking[1] == std::vector<std::string>{canonical_code(fixtures::digon())});
  for (const SurveyRecord& rec : r.records) CHECK(rec.breaking[1] == !is_tree_with_loops(rec.graph));

  SurveyReport two = run_survey(2, 4, {VarietySpec::ab_exp(3)});
  for (const SurveyRecord& rec : two.records) CHECK_FALSE(rec.breaking[0]);

  CHECK(survey_to_json(run_survey(3, 3, {VarietySpec::ab_exp(2)})).dump() ==
        survey_to_json(run_survey(3, 3, {VarietySpec::ab_exp(2)})).dump());
  CHECK_THROWS_AS(run_survey(5, 4, {VarietySpec::ab_exp(2)}), BudgetError);
  CHECK_THROWS_AS(run_survey(2, 2, {VarietySpec::ab_free()}), UnsupportedVariety);
}

TEST_CASE("graph documents round-trip exactly") {
  const std::string text =
      R"({"vertices":["u","v","w"],"edges":[{"id":"a","src":"u","dst":"v"},{"id":"b","src":"u","dst":"v"},)"
      R"({"id":"c","src":"w","dst":"u"},{"id":"d","src":"v","dst":"w"}]})";
  Graph g = graph_from_json(Json::parse(text));
  CHECK(g == fixtures::theta3());
  CHECK(graph_to_json(g).dump() == text);
  for (const char* name : {"THETA3", "DIGONS2", "BRIDGECYC", "DIGON", "LOOP1", "C3", "P4", "DECC3"}) {
    Graph f = *fixtures::by_name(name);
    CHECK(graph_from_json(graph_to_json(f)) == f);
  }
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["u"]})")), DomainError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["u"],"edges":[{"id":"a","src":"u","dst":"x"}]})")),
                  DomainError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[1],"edges":[]})")), DomainError);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.json"), DomainError);
  CHECK(load_graph("DECC3") == fixtures::decorated_cycle(3));
}

TEST_CASE("certificate documents round-trip") {
  for (const Certificate& c : builtin_certificates()) {
    Json j = certificate_to_json(c);
    Certificate back = certificate_from_json(j);
    CHECK(certificate_to_json(back).dump() == j.dump());
    CHECK(check_certificate(back).verdict == CheckReport::Verdict::verified);
  }
  CHECK_THROWS_AS(certificate_from_json(Json::parse("{}")), DomainError);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(fixtures::theta3());
  CHECK(dot.find("\"u\" -> \"v\" [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("\"u\" -> \"v\" [label=\"b\"]") != std::string::npos);
  CHECK(dot.find("red") == std::string::npos);
  CHECK(to_dot(fixtures::theta3(), Subgraph{}) == dot);

  Graph c3 = fixtures::cycle(3);
  std::string marked = to_dot(c3, parse_subgraph(c3, "0;"));
  CHECK(marked.find("\"0\" [color=red, fontcolor=red];") != std::string::npos);
  CHECK(marked.find("\"1\";") != std::string::npos);
  CHECK(to_dot(c3, parse_subgraph(c3, "0;")) == marked);
  CHECK_THROWS_AS(parse_subgraph(c3, "9;"), DomainError);
}
