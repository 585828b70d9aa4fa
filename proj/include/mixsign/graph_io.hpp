#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mixsign/graph.hpp"

namespace mixsign {

struct ParsedGraph {
  RawGraph raw;
  // Non-fatal diagnostics, e.g. ignored top-level keys.
  std::vector<std::string> warnings;
};

// Parses the JSON graph format. Syntax errors throw ParseError with a
// "line L, column C" position.
ParsedGraph parse_graph_json(std::string_view text);

// Parse and validate.
MixedSignGraph load_graph_json(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Serialized form always carries an explicit fatgraph.
std::string serialize_graph(const MixedSignGraph& g);

}  // namespace mixsign
