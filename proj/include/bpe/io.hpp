#pragma once

// JSON forms of graphs, certificates and reports.
//
// Graph:       {"vertices": ["u", ...], "edges": [{"id": "a", "src": "u", "dst": "v"}, ...]}
// Certificate: {"name": ..., "graph": <graph>, "claimed_level": 1,
//               "root": {"arrow": {"src": "u", "dst": "v", "vec": {"a": 1}},
//                        "factorizations": [[<node>, ...], ...]}}

#include <string>

#include <json.hpp>

#include "bpe/certificate.hpp"
#include "bpe/fixpoint.hpp"
#include "bpe/graph.hpp"
#include "bpe/survey.hpp"

namespace bpe {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
/// Throws DomainError on a malformed document.
Graph graph_from_json(const Json& j);

Json value_to_json(const Graph& g, const ArrowValue& x);
ArrowValue value_from_json(const Graph& g, const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json subgraph_to_json(const Graph& g, const Subgraph& s);
Json verdict_to_json(const Verdict& v);
Json check_report_to_json(const Certificate& c, const CheckReport& r);
Json survey_to_json(const SurveyReport& r);

std::string read_text_file(const std::string& path);
/// A fixture name (THETA3, C4, ...) or a path to a graph JSON file.
Graph load_graph(const std::string& name_or_path);

}  // namespace bpe
