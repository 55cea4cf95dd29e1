#include "hanzigraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hanzigraph/utf8.hpp"
#include "json.hpp"

namespace hanzi {
namespace {

using nlohmann::json;

std::string number_text(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string node_id(char32_t v) { return "U" + utf8::hex(v); }

}  // namespace

std::string_view to_string(ExportFormat f) noexcept {
  switch (f) {
    case ExportFormat::json: return "json";
    case ExportFormat::graphml: return "graphml";
    case ExportFormat::dot: return "dot";
  }
  return "?";
}

std::optional<ExportFormat> export_format_from(std::string_view name) noexcept {
  if (name == "json") return ExportFormat::json;
  if (name == "graphml") return ExportFormat::graphml;
  if (name == "dot") return ExportFormat::dot;
  return std::nullopt;
}

std::string to_json(const WeightedGraph& g) {
  json doc;
  doc["kind"] = std::string(to_string(g.kind()));
  doc["provenance"] = {{"weight", g.provenance().weight}, {"params", g.provenance().params}};
  json vertices = json::array();
  for (char32_t v : g.vertices()) vertices.push_back(utf8::hex(v));
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [pair, w] : g.edges()) edges.push_back({utf8::hex(pair.first), utf8::hex(pair.second), w});
  doc["edges"] = std::move(edges);
  json h_edges = json::array();
  for (const auto& [from, to] : g.h_edges()) h_edges.push_back({utf8::hex(from), utf8::hex(to)});
  doc["h_edges"] = std::move(h_edges);
  return doc.dump(2) + '\n';
}

WeightedGraph graph_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const auto kind = graph_kind_from(doc.at("kind").get<std::string>());
    if (!kind) throw DataError("unknown graph kind " + doc.at("kind").dump());
    WeightedGraph g(*kind);
    Provenance p;
    p.weight = doc.at("provenance").at("weight").get<std::string>();
    p.params = doc.at("provenance").at("params").get<std::map<std::string, std::string>>();
    g.set_provenance(std::move(p));
    for (const auto& v : doc.at("vertices")) g.add_vertex(utf8::parse_hex(v.get<std::string>()));
    for (const auto& e : doc.at("edges")) {
      g.add_edge(utf8::parse_hex(e.at(0).get<std::string>()), utf8::parse_hex(e.at(1).get<std::string>()),
                 e.at(2).get<double>());
    }
    for (const auto& e : doc.at("h_edges")) {
      g.add_h_edge(utf8::parse_hex(e.at(0).get<std::string>()), utf8::parse_hex(e.at(1).get<std::string>()));
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what(), 1);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph json: ") + e.what(), 1);
  } catch (const DataError& e) {
    throw ParseError(std::string("graph json: ") + e.what(), 1);
  }
}

std::string to_graphml(const WeightedGraph& g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
      << "  <key id=\"kind\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n"
      << "  <graph id=\"" << to_string(g.kind()) << "\" edgedefault=\"undirected\">\n";
  for (char32_t v : g.vertices()) {
    out << "    <node id=\"" << node_id(v) << "\"><data key=\"label\">" << xml_escape(utf8::encode(v))
        << "</data></node>\n";
  }
  const std::string undirected_kind = g.kind() == GraphKind::strokes      ? "s"
                                      : g.kind() == GraphKind::components ? "r"
                                                                          : "m";
  std::size_t n = 0;
  for (const auto& [pair, w] : g.edges()) {
    out << "    <edge id=\"e" << n++ << "\" source=\"" << node_id(pair.first) << "\" target=\""
        << node_id(pair.second) << "\"><data key=\"weight\">" << number_text(w) << "</data><data key=\"kind\">"
        << undirected_kind << "</data></edge>\n";
  }
  for (const auto& [from, to] : g.h_edges()) {
    out << "    <edge id=\"e" << n++ << "\" source=\"" << node_id(from) << "\" target=\"" << node_id(to)
        << "\" directed=\"true\"><data key=\"kind\">H</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string to_dot(const WeightedGraph& g) {
  std::ostringstream out;
  out << "digraph \"" << to_string(g.kind()) << "\" {\n";
  for (char32_t v : g.vertices()) {
    out << "  " << node_id(v) << " [label=\"" << dot_escape(utf8::encode(v)) << "\"];\n";
  }
  for (const auto& [pair, w] : g.edges()) {
    out << "  " << node_id(pair.first) << " -> " << node_id(pair.second) << " [dir=none, weight=" << number_text(w)
        << ", label=\"" << number_text(w) << "\"];\n";
  }
  for (const auto& [from, to] : g.h_edges()) {
    out << "  " << node_id(from) << " -> " << node_id(to) << " [label=\"H\", style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render(const WeightedGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::json: return to_json(g);
    case ExportFormat::graphml: return to_graphml(g);
    case ExportFormat::dot: return to_dot(g);
  }
  return {};
}

void write_graph(const WeightedGraph& g, ExportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << render(g, format);
  if (!out) throw Error("failed writing " + path.string());
}

WeightedGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

}  // namespace hanzi
