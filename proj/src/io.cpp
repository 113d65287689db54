#include "bpe/io.hpp"

#include <fstream>
#include <sstream>

#include "bpe/error.hpp"
#include "bpe/fixtures.hpp"
#include "bpe/path.hpp"

namespace bpe {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw DomainError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

VertexId vertex_named(const Graph& g, const Json& j) {
  auto v = g.find_vertex(text(j, "vertex"));
  if (!v) throw DomainError("unknown vertex " + j.get<std::string>());
  return *v;
}

Json node_to_json(const Graph& g, const CertNode& n) {
  Json facs = Json::array();
  for (const auto& f : n.factorizations) {
    Json kids = Json::array();
    for (const CertNode& k : f) kids.push_back(node_to_json(g, k));
    facs.push_back(std::move(kids));
  }
  return Json{{"arrow", value_to_json(g, n.arrow)}, {"factorizations", std::move(facs)}};
}

CertNode node_from_json(const Graph& g, const Json& j) {
  CertNode n{value_from_json(g, field(j, "arrow")), {}};
  if (j.contains("factorizations")) {
    const Json& facs = j.at("factorizations");
    if (!facs.is_array()) throw DomainError("factorizations must be an array");
    for (const Json& f : facs) {
      if (!f.is_array()) throw DomainError("a factorization must be an array of nodes");
      std::vector<CertNode> kids;
      for (const Json& k : f) kids.push_back(node_from_json(g, k));
      n.factorizations.push_back(std::move(kids));
    }
  }
  return n;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json vs = Json::array();
  for (const auto& name : g.vertex_names()) vs.push_back(name);
  Json es = Json::array();
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    es.push_back({{"id", g.edge_name(EdgeId{i})},
                  {"src", g.vertex_name(e.src)},
                  {"dst", g.vertex_name(e.dst)}});
  }
  return Json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

Graph graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) throw DomainError("vertices and edges must be arrays");
  std::vector<std::string> vnames;
  for (const Json& v : vs) vnames.push_back(text(v, "vertex name"));
  std::vector<std::string> enames;
  std::vector<std::pair<std::string, std::string>> ends;
  for (const Json& e : es) {
    enames.push_back(text(field(e, "id"), "edge id"));
    ends.emplace_back(text(field(e, "src"), "edge src"), text(field(e, "dst"), "edge dst"));
  }
  auto index = [&](const std::string& name) {
    for (std::uint32_t v = 0; v < vnames.size(); ++v)
      if (vnames[v] == name) return VertexId{v};
    throw DomainError("edge endpoint " + name + " is not a vertex");
  };
  std::vector<Edge> edges;
  for (const auto& [s, d] : ends) edges.push_back({index(s), index(d)});
  return Graph(std::move(vnames), std::move(enames), std::move(edges));
}

Json value_to_json(const Graph& g, const ArrowValue& x) {
  Json vec = Json::object();
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    if (x.coefficient(EdgeId{e}) != 0) vec[g.edge_name(EdgeId{e})] = x.coefficient(EdgeId{e});
  }
  return Json{{"src", g.vertex_name(x.src())}, {"dst", g.vertex_name(x.dst())}, {"vec", std::move(vec)}};
}

ArrowValue value_from_json(const Graph& g, const Json& j) {
  VertexId src = vertex_named(g, field(j, "src"));
  VertexId dst = vertex_named(g, field(j, "dst"));
  std::vector<std::int64_t> vec(g.edge_count(), 0);
  if (j.contains("vec")) {
    const Json& m = j.at("vec");
    if (!m.is_object()) throw DomainError("vec must be an object from edge ids to integers");
    for (const auto& [name, c] : m.items()) {
      auto e = g.find_edge(name);
      if (!e) throw DomainError("unknown edge " + name);
      if (!c.is_number_integer()) throw DomainError("coefficient of " + name + " is not an integer");
      vec[e->index] = c.get<std::int64_t>();
    }
  }
  // Boundary and variety are left to the consumer (the certificate checker reports them).
  return ArrowValue::unchecked(VarietySpec::ab_free(), src, dst, std::move(vec));
}

Json certificate_to_json(const Certificate& c) {
  return Json{{"name", c.name},
              {"graph", graph_to_json(c.graph)},
              {"root", node_to_json(c.graph, c.root)},
              {"claimed_level", c.claimed_level}};
}

Certificate certificate_from_json(const Json& j) {
  try {
    Graph g = graph_from_json(field(j, "graph"));
    Certificate c{j.contains("name") ? text(j.at("name"), "name") : std::string{}, g,
                  node_from_json(g, field(j, "root")), 0};
    const Json& lvl = field(j, "claimed_level");
    if (!lvl.is_number_integer()) throw DomainError("claimed_level must be an integer");
    c.claimed_level = lvl.get<int>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(e.what());
  }
}

Json subgraph_to_json(const Graph& g, const Subgraph& s) {
  Json vs = Json::array(), es = Json::array();
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (s.contains(VertexId{v})) vs.push_back(g.vertex_name(VertexId{v}));
  for (std::uint32_t e = 0; e < g.edge_count(); ++e)
    if (s.contains(EdgeId{e})) es.push_back(g.edge_name(EdgeId{e}));
  return Json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

Json verdict_to_json(const Verdict& v) {
  const Graph& g = v.table.graph();
  Json j{{"variety", v.table.variety().to_string()},
         {"arrows", v.table.size()},
         {"levels", v.table.level()},
         {"verdict", v.holds() ? "holds" : "breaking"}};
  if (v.breaking) {
    j["witness"] = Json{{"value", format_value(g, v.table.arrow(v.breaking->arrow))},
                        {"start", g.vertex_name(v.breaking->path.start())},
                        {"path", format_path(g, v.breaking->path)},
                        {"level", v.breaking->level_found},
                        {"P", subgraph_to_json(g, v.table.p_current()[v.breaking->arrow])}};
  }
  return j;
}

Json check_report_to_json(const Certificate& c, const CheckReport& r) {
  Json j{{"certificate", c.name}, {"verdict", to_string(r.verdict)}};
  if (r.verdict == CheckReport::Verdict::malformed) {
    j["reason"] = r.reason;
    return j;
  }
  j["proven_level"] = r.proven_level;
  j["claimed_level"] = c.claimed_level;
  j["final_upper_p"] = subgraph_to_json(c.graph, r.final_upper_p);
  Json nodes = Json::array();
  for (const NodeBound& n : r.nodes) {
    nodes.push_back({{"node", n.path},
                     {"level", n.level},
                     {"leaf_bound", subgraph_to_json(c.graph, n.leaf_bound)},
                     {"bound", subgraph_to_json(c.graph, n.bound)}});
  }
  j["nodes"] = std::move(nodes);
  return j;
}

Json survey_to_json(const SurveyReport& r) {
  Json varieties = Json::array();
  for (const VarietySpec& u : r.varieties) varieties.push_back(u.to_string());
  Json records = Json::array();
  for (const SurveyRecord& s : r.records) {
    Json verdicts = Json::object();
    for (std::size_t k = 0; k < r.varieties.size(); ++k)
      verdicts[r.varieties[k].to_string()] = s.breaking[k] ? "breaking" : "holds";
    records.push_back({{"code", s.code},
                       {"vertices", s.graph.vertex_count()},
                       {"edges", s.graph.edge_count()},
                       {"verdicts", std::move(verdicts)},
                       {"structure", describe(s.structure)},
                       {"tree_with_loops", s.tree_with_loops},
                       {"agrees", s.agrees}});
  }
  Json minimal = Json::object();
  for (std::size_t k = 0; k < r.varieties.size(); ++k) minimal[r.varieties[k].to_string()] = r.minimal_breaking[k];
  return Json{{"max_vertices", r.max_vertices},
              {"max_edges", r.max_edges},
              {"varieties", std::move(varieties)},
              {"graphs", r.records.size()},
              {"disagreements", r.disagreements},
              {"minimal_breaking", std::move(minimal)},
              {"records", std::move(records)}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph load_graph(const std::string& name_or_path) {
  if (auto g = fixtures::by_name(name_or_path)) return *g;
  std::string body = read_text_file(name_or_path);
  try {
    return graph_from_json(Json::parse(body));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(name_or_path + ": " + e.what());
  }
}

}  // namespace bpe
