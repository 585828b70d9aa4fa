#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixsign/matrix.hpp"

namespace mixsign {

// Untyped description, as read from a file or assembled by hand.
struct RawVertex {
  std::string id;
  long sign = 1;
};

struct RawGraph {
  std::vector<RawVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::map<std::string, std::vector<std::string>>> fatgraph;
};

struct Edge {
  std::size_t a;  // a < b in the global ordering
  std::size_t b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Validated mixed-sign graph. Vertex i (0-based) is the i-th vertex of the
// global ordering. Immutable after construction.
class MixedSignGraph {
 public:
  MixedSignGraph() = default;

  static MixedSignGraph validate(const RawGraph& raw);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(std::size_t v) const { return ids_.at(v); }
  int sign(std::size_t v) const { return signs_.at(v); }
  const std::vector<int>& signs() const { return signs_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t v, std::size_t w) const { return adj_[v * ids_.size() + w] != 0; }
  std::size_t degree(std::size_t v) const { return rotation_.at(v).size(); }
  // Cyclic order of the neighbors of v.
  const std::vector<std::size_t>& rotation(std::size_t v) const { return rotation_.at(v); }
  std::optional<std::size_t> index_of(std::string_view id) const;

  RawGraph to_raw() const;

  friend bool operator==(const MixedSignGraph& a, const MixedSignGraph& b) {
    return a.ids_ == b.ids_ && a.signs_ == b.signs_ && a.edges_ == b.edges_ && a.rotation_ == b.rotation_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<int> signs_;
  std::vector<Edge> edges_;  // sorted
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<std::size_t>> rotation_;
};

IntMatrix adjacency_matrix(const MixedSignGraph& g);

struct Bipartition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

// Two-coloring found by breadth-first search from the lowest-index vertex of
// each component, which goes into `first`. Absent if there is an odd cycle.
std::optional<Bipartition> bipartition(const MixedSignGraph& g);
bool is_bipartite(const MixedSignGraph& g);

// order[k] is the old index of the vertex placed at position k.
MixedSignGraph reorder(const MixedSignGraph& g, const std::vector<std::size_t>& order);
MixedSignGraph with_signs(const MixedSignGraph& g, const std::vector<int>& signs);

// Stable reorder putting the first part before the second. Throws NotBipartite.
MixedSignGraph bipartite_ordering(const MixedSignGraph& g);

std::vector<std::vector<std::size_t>> connected_components(const MixedSignGraph& g);
bool is_connected(const MixedSignGraph& g);

}  // namespace mixsign
