#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bpe/certificate.hpp"
#include "bpe/content.hpp"
#include "bpe/dot.hpp"
#include "bpe/error.hpp"
#include "bpe/fixpoint.hpp"
#include "bpe/fixtures.hpp"
#include "bpe/io.hpp"
#include "bpe/minors.hpp"
#include "bpe/survey.hpp"

namespace py = pybind11;
using namespace bpe;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Graph make_graph(const std::vector<std::string>& vertices,
                 const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  Json j{{"vertices", vertices}, {"edges", Json::array()}};
  for (const auto& [id, s, d] : edges) j["edges"].push_back({{"id", id}, {"src", s}, {"dst", d}});
  return graph_from_json(j);
}

py::dict decide(const Graph& g, const std::string& variety, bool trace) {
  Verdict v = decide_T(g, parse_variety(variety));
  py::dict out = to_python(verdict_to_json(v));
  if (trace) {
    std::ostringstream s;
    write_trace(s, v);
    out["trace"] = s.str();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(bpe, m) {
  m.doc() = "Breaking paths over group varieties on small multigraphs";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertices"), py::arg("edges"),
           "Edges are (id, src, dst) name triples.")
      .def_static("fixture", [](const std::string& name) {
        auto g = fixtures::by_name(name);
        if (!g) throw DomainError("unknown fixture " + name);
        return *g;
      })
      .def_static("from_json", [](const py::object& o) { return graph_from_json(from_python(o)); })
      .def_static("from_code", &graph_from_code)
      .def("to_json", [](const Graph& g) { return to_python(graph_to_json(g)); })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("vertices", [](const Graph& g) {
        return std::vector<std::string>(g.vertex_names().begin(), g.vertex_names().end());
      })
      .def_property_readonly("edges", [](const Graph& g) {
        return std::vector<std::string>(g.edge_names().begin(), g.edge_names().end());
      })
      .def("canonical_code", &canonical_code)
      .def("to_dot", [](const Graph& g, std::optional<std::string> highlight) {
        return to_dot(g, highlight ? std::optional(parse_subgraph(g, *highlight)) : std::nullopt);
      }, py::arg("highlight") = py::none())
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
               " edges>";
      });

  m.def("fixtures", &fixtures::names);
  m.def("decide", &decide, py::arg("graph"), py::arg("variety"), py::arg("trace") = false,
        "Fixpoint decision for trivial or ab:N; returns the verdict and a witness path when breaking.");
  m.def("arrow_count", [](const Graph& g, const std::string& variety) {
    return value_count(g, parse_variety(variety));
  });
  m.def("value_of_path", [](const Graph& g, const std::string& variety, const std::string& start,
                            const std::string& word) {
    auto v = g.find_vertex(start);
    if (!v) throw DomainError("unknown vertex " + start);
    return format_value(g, value_of_path(g, parse_variety(variety), parse_path_text(g, *v, word)));
  });
  m.def("content", [](const Graph& g, const std::string& variety, const std::string& start,
                      const std::string& word) {
    auto v = g.find_vertex(start);
    if (!v) throw DomainError("unknown vertex " + start);
    ContentReport r = content_report(g, value_of_path(g, parse_variety(variety), parse_path_text(g, *v, word)));
    return py::dict(py::arg("c0") = format_subgraph(g, r.c0), py::arg("c0_hat") = format_subgraph(g, r.c0_hat),
                    py::arg("p0") = format_subgraph(g, r.p0));
  });
  m.def("check_certificate", [](const py::object& cert) {
    Certificate c = certificate_from_json(from_python(cert));
    return to_python(check_report_to_json(c, check_certificate(c)));
  });
  m.def("builtin_certificate", [](const std::string& name) -> py::object {
    for (const Certificate& c : builtin_certificates())
      if (c.name == name) return to_python(certificate_to_json(c));
    throw DomainError("no builtin certificate named " + name);
  });
  m.def("minor_contains", [](const Graph& g, const Graph& h) -> py::object {
    auto match = minor_contains(g, h);
    if (!match) return py::none();
    py::list ops;
    static const char* names[] = {"delete_edge", "delete_vertex", "contract_edge", "redirect_edge"};
    for (const GraphEdit& op : match->ops) ops.append(py::make_tuple(names[static_cast<int>(op.kind)], op.id));
    return ops;
  }, py::arg("g"), py::arg("h"), "Edit list turning g into h (ids refer to the graph at each step), or None.");
  m.def("structure_class", [](const Graph& g) { return describe(has_forbidden_minor(g)); });
  m.def("minor_catalog", [] {
    py::dict out;
    auto graphs = minor_catalog();
    for (std::size_t i = 0; i < graphs.size(); ++i) out[py::str(catalog_name(i))] = graphs[i];
    return out;
  });
  m.def("survey", [](std::size_t max_vertices, std::size_t max_edges, const std::vector<std::string>& varieties) {
    std::vector<VarietySpec> us;
    for (const auto& s : varieties) us.push_back(parse_variety(s));
    return to_python(survey_to_json(run_survey(max_vertices, max_edges, us)));
  }, py::arg("max_vertices"), py::arg("max_edges"), py::arg("varieties") = std::vector<std::string>{"ab:2"});
}
