#include "bpe/dot.hpp"

#include <sstream>

#include "bpe/error.hpp"

namespace bpe {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

std::string to_dot(const Graph& g, const std::optional<Subgraph>& highlight) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quoted(g.vertex_name(VertexId{v}));
    if (highlight && highlight->contains(VertexId{v})) out << " [color=red, fontcolor=red]";
    out << ";\n";
  }
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    out << "  " << quoted(g.vertex_name(e.src)) << " -> " << quoted(g.vertex_name(e.dst))
        << " [label=" << quoted(g.edge_name(EdgeId{i}));
    if (highlight && highlight->contains(EdgeId{i})) out << ", color=red, fontcolor=red, penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Subgraph parse_subgraph(const Graph& g, const std::string& text) {
  Subgraph s;
  const auto semi = text.find(';');
  const std::string vpart = text.substr(0, semi);
  const std::string epart = semi == std::string::npos ? "" : text.substr(semi + 1);
  for (const std::string& name : split(vpart, ',')) {
    auto v = g.find_vertex(name);
    if (!v) throw DomainError("unknown vertex " + name);
    s.vertices |= Mask{1} << v->index;
  }
  for (const std::string& name : split(epart, ',')) {
    auto e = g.find_edge(name);
    if (!e) throw DomainError("unknown edge " + name);
    s.edges |= Mask{1} << e->index;
  }
  return s;
}

}  // namespace bpe
