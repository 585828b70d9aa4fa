#include "mixsign/graph_io.hpp"

#include <json.hpp>

namespace mixsign {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void shape_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string vertex_id(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) shape_error(where + ": vertex ids must be strings");
  return j.get<std::string>();
}

}  // namespace

ParsedGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::ParseError, "malformed JSON at " + position(text, byte));
  }
  if (!doc.is_object()) shape_error("top level must be an object");
  ParsedGraph out;
  for (const auto& [key, value] : doc.items())
    if (key != "vertices" && key != "edges" && key != "fatgraph")
      out.warnings.push_back("ignoring unknown top-level key '" + key + "'");

  if (!doc.contains("vertices") || !doc["vertices"].is_array()) shape_error("'vertices' must be an array");
  std::size_t k = 0;
  for (const auto& v : doc["vertices"]) {
    std::string where = "vertices[" + std::to_string(k++) + "]";
    if (!v.is_object() || !v.contains("id") || !v.contains("sign")) shape_error(where + ": expected {\"id\":..., \"sign\":...}");
    RawVertex rv;
    rv.id = vertex_id(v["id"], where);
    const auto& s = v["sign"];
    if (s.is_number_integer())
      rv.sign = s.get<long>();
    else
      throw Error(ErrorCode::BadSign, where + ": sign must be the integer 1 or -1");
    out.raw.vertices.push_back(std::move(rv));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) shape_error("'edges' must be an array");
    k = 0;
    for (const auto& e : doc["edges"]) {
      std::string where = "edges[" + std::to_string(k++) + "]";
      if (!e.is_array() || e.size() != 2) shape_error(where + ": expected a pair of vertex ids");
      out.raw.edges.emplace_back(vertex_id(e[0], where), vertex_id(e[1], where));
    }
  }
  if (doc.contains("fatgraph")) {
    const auto& f = doc["fatgraph"];
    if (!f.is_object()) shape_error("'fatgraph' must be an object");
    out.raw.fatgraph.emplace();
    for (const auto& [vid, order] : f.items()) {
      if (!order.is_array()) shape_error("fatgraph entry '" + vid + "' must be an array");
      auto& seq = (*out.raw.fatgraph)[vid];
      for (const auto& w : order) seq.push_back(vertex_id(w, "fatgraph entry '" + vid + "'"));
    }
  }
  return out;
}

MixedSignGraph load_graph_json(std::string_view text, std::vector<std::string>* warnings) {
  ParsedGraph parsed = parse_graph_json(text);
  if (warnings) *warnings = parsed.warnings;
  return MixedSignGraph::validate(parsed.raw);
}

std::string serialize_graph(const MixedSignGraph& g) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (std::size_t i = 0; i < g.size(); ++i) doc["vertices"].push_back({{"id", g.id(i)}, {"sign", g.sign(i)}});
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) doc["edges"].push_back({g.id(e.a), g.id(e.b)});
  doc["fatgraph"] = ordered_json::object();
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) continue;
    ordered_json seq = ordered_json::array();
    for (std::size_t w : g.rotation(v)) seq.push_back(g.id(w));
    doc["fatgraph"][g.id(v)] = seq;
  }
  return doc.dump(2) + "\n";
}

}  // namespace mixsign
