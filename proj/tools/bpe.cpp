// bpe: decide breaking paths, survey small graphs, check certificates, query minors.
//
// Exit codes: 0 positive (holds / verified / found), 1 negative (breaking /
// not proven / not found / contains a forbidden minor), 2 input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpe/budget.hpp"
#include "bpe/certificate.hpp"
#include "bpe/dot.hpp"
#include "bpe/error.hpp"
#include "bpe/fixpoint.hpp"
#include "bpe/io.hpp"
#include "bpe/minors.hpp"
#include "bpe/survey.hpp"

namespace {

using namespace bpe;

constexpr int kInputError = 2;

int run_decide(const std::string& graph_arg, const std::string& variety_arg, bool trace, bool witness,
               bool json) {
  Graph g = load_graph(graph_arg);
  VarietySpec u = parse_variety(variety_arg);
  if (u.kind == VarietySpec::Kind::ab_free) {
    std::cerr << "decide needs a locally finite variety (trivial or ab:N); "
                 "for the free Abelian variety use `bpe cert check <file>`\n";
    return kInputError;
  }
  Verdict v = decide_T(g, u);
  if (json) {
    std::cout << verdict_to_json(v).dump(2) << '\n';
  } else if (trace) {
    write_trace(std::cout, v);
  } else if (v.holds()) {
    std::cout << "holds (" << v.table.size() << " arrows, stable at level " << v.table.level() << ")\n";
  } else {
    std::cout << "breaking: " << format_value(g, v.table.arrow(v.breaking->arrow)) << " at level "
              << v.breaking->level_found << '\n';
  }
  if (witness && v.breaking && !json) {
    std::cout << "witness start=" << g.vertex_name(v.breaking->path.start())
              << " path=" << format_path(g, v.breaking->path) << '\n';
  }
  return v.holds() ? 0 : 1;
}

int run_survey_cmd(std::size_t max_v, std::size_t max_e, const std::vector<std::string>& variety_args,
                   bool json, bool progress) {
  std::vector<VarietySpec> us;
  for (const auto& s : variety_args) us.push_back(parse_variety(s));
  auto tick = [&](std::size_t done, std::size_t total) {
    if (progress && (done % 50 == 0 || done == total)) std::cerr << "\rsurveyed " << done << "/" << total << std::flush;
  };
  SurveyReport r = run_survey(max_v, max_e, us, tick);
  if (progress) std::cerr << '\n';
  if (json) {
    std::cout << survey_to_json(r).dump(2) << '\n';
  } else {
    std::cout << "graphs: " << r.records.size() << " (vertices <= " << max_v << ", edges <= " << max_e << ")\n";
    for (std::size_t k = 0; k < us.size(); ++k) {
      std::size_t breaking = 0;
      for (const auto& rec : r.records) breaking += rec.breaking[k] ? 1 : 0;
      std::cout << us[k].to_string() << ": " << breaking << " breaking; minimal:";
      for (const auto& code : r.minimal_breaking[k]) std::cout << ' ' << code;
      std::cout << '\n';
    }
    std::cout << "disagreements: " << r.disagreements << '\n';
    for (const auto& rec : r.records)
      if (!rec.agrees) std::cout << "  disagree " << rec.code << ' ' << describe(rec.structure) << '\n';
  }
  return r.disagreements == 0 ? 0 : 1;
}

int report_check(const Certificate& c, bool json) {
  CheckReport r = check_certificate(c);
  if (json) {
    std::cout << check_report_to_json(c, r).dump(2) << '\n';
  } else {
    std::cout << to_string(r.verdict);
    if (r.verdict == CheckReport::Verdict::malformed) {
      std::cout << ": " << r.reason << '\n';
    } else {
      std::cout << " level=" << r.proven_level << " P=" << format_subgraph(c.graph, r.final_upper_p) << '\n';
      for (const NodeBound& n : r.nodes)
        std::cout << "  " << n.path << " level=" << n.level << " P=" << format_subgraph(c.graph, n.bound) << '\n';
    }
  }
  switch (r.verdict) {
    case CheckReport::Verdict::verified:
      return 0;
    case CheckReport::Verdict::not_proven:
      return 1;
    case CheckReport::Verdict::malformed:
      break;
  }
  return kInputError;
}

int run_cert_check(const std::string& file, bool json) {
  std::optional<Certificate> c;
  try {
    c = certificate_from_json(Json::parse(read_text_file(file)));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "Malformed: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "Malformed: " << e.what() << '\n';
    return kInputError;
  }
  return report_check(*c, json);
}

int run_cert_builtin(const std::string& name, bool dump, bool json) {
  for (const Certificate& c : builtin_certificates()) {
    if (c.name != name) continue;
    if (dump) {
      std::cout << certificate_to_json(c).dump(2) << '\n';
      return 0;
    }
    return report_check(c, json);
  }
  std::cerr << "no builtin certificate named " << name << " (THETA3, DIGONS2)\n";
  return kInputError;
}

int run_minors(const std::vector<std::string>& contains, const std::string& forbidden, bool catalog) {
  if (catalog) {
    Json out = Json::object();
    auto graphs = minor_catalog();
    for (std::size_t i = 0; i < graphs.size(); ++i) out[catalog_name(i)] = graph_to_json(graphs[i]);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (!contains.empty()) {
    Graph h = load_graph(contains[0]);
    Graph g = load_graph(contains[1]);
    auto m = minor_contains(g, h);
    if (!m) {
      std::cout << "not a minor\n";
      return 1;
    }
    std::cout << "minor found:";
    for (const GraphEdit& op : m->ops) {
      static const char* names[] = {"delete_edge", "delete_vertex", "contract", "redirect"};
      std::cout << ' ' << names[static_cast<int>(op.kind)] << '(' << op.id << ')';
    }
    std::cout << '\n';
    return 0;
  }
  Graph g = load_graph(forbidden);
  StructureClass s = has_forbidden_minor(g);
  std::cout << describe(s) << '\n';
  return s.tag == StructureClass::Tag::contains_forbidden ? 1 : 0;
}

int run_export(const std::string& graph_arg, const std::optional<std::string>& highlight) {
  Graph g = load_graph(graph_arg);
  std::optional<Subgraph> h;
  if (highlight) h = parse_subgraph(g, *highlight);
  std::cout << to_dot(g, h);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Breaking paths over group varieties on small multigraphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string graph_arg, variety_arg;
  bool trace = false, witness = false;
  auto* decide = app.add_subcommand("decide", "Decide whether a breaking path exists");
  decide->add_option("graph", graph_arg, "Fixture name or graph JSON file")->required();
  decide->add_option("variety", variety_arg, "trivial | ab:N")->required();
  decide->add_flag("--trace", trace, "Print the fixpoint trace");
  decide->add_flag("--witness", witness, "Print the breaking path");

  std::size_t max_v = 3, max_e = 4;
  std::vector<std::string> survey_varieties;
  bool progress = false;
  auto* survey = app.add_subcommand("survey", "Decide every small connected multigraph");
  survey->add_option("--max-vertices", max_v, "Vertex bound")->capture_default_str();
  survey->add_option("--max-edges", max_e, "Edge bound")->capture_default_str();
  survey->add_option("--variety", survey_varieties, "Varieties (repeatable)")->default_val(std::vector<std::string>{"ab:2"});
  survey->add_flag("--progress", progress, "Report progress on stderr");

  auto* cert = app.add_subcommand("cert", "Free Abelian certificates");
  cert->require_subcommand(1);
  std::string cert_file, cert_name;
  bool dump = false;
  auto* check = cert->add_subcommand("check", "Check a certificate file");
  check->add_option("file", cert_file)->required();
  auto* builtin = cert->add_subcommand("builtin", "Check (or print) a builtin certificate");
  builtin->add_option("name", cert_name, "THETA3 | DIGONS2")->required();
  builtin->add_flag("--dump", dump, "Print the certificate file instead of checking it");

  std::vector<std::string> contains;
  std::string forbidden;
  bool catalog = false;
  auto* minors = app.add_subcommand("minors", "Minor queries");
  auto* c_opt = minors->add_option("--contains", contains, "H G: is H a minor of G")->expected(2);
  auto* f_opt = minors->add_option("--forbidden", forbidden, "Classify G against the catalog");
  auto* k_opt = minors->add_flag("--catalog", catalog, "Print the catalog graphs");
  c_opt->excludes(f_opt)->excludes(k_opt);
  f_opt->excludes(k_opt);
  minors->require_option(1);

  std::optional<std::string> highlight;
  std::string dot_graph;
  auto* exp = app.add_subcommand("export", "Graphviz export");
  exp->add_option("--dot", dot_graph, "Fixture name or graph JSON file")->required();
  exp->add_option("--highlight", highlight, "Subgraph \"u,v;a,b\" to mark");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    Budget::current();
    if (*decide) return run_decide(graph_arg, variety_arg, trace, witness, json);
    if (*survey) return run_survey_cmd(max_v, max_e, survey_varieties, json, progress);
    if (*check) return run_cert_check(cert_file, json);
    if (*builtin) return run_cert_builtin(cert_name, dump, json);
    if (*minors) return run_minors(contains, forbidden, catalog);
    if (*exp) return run_export(dot_graph, highlight);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
