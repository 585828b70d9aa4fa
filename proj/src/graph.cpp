#include "mixsign/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

namespace mixsign {

namespace {

// Rotate a cyclic sequence so that its smallest entry comes first.
void canonical_rotation(std::vector<std::size_t>& cyc) {
  if (cyc.empty()) return;
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
}

}  // namespace

MixedSignGraph MixedSignGraph::validate(const RawGraph& raw) {
  MixedSignGraph g;
  const std::size_t n = raw.vertices.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = raw.vertices[i];
    if (!index.emplace(v.id, i).second) throw Error(ErrorCode::DuplicateVertex, "vertex '" + v.id + "' listed twice");
    if (v.sign != 1 && v.sign != -1)
      throw Error(ErrorCode::BadSign, "vertex '" + v.id + "' has sign " + std::to_string(v.sign));
    g.ids_.push_back(v.id);
    g.signs_.push_back(static_cast<int>(v.sign));
  }
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
    return it->second;
  };
  g.adj_.assign(n * n, 0);
  for (const auto& [x, y] : raw.edges) {
    std::size_t a = lookup(x), b = lookup(y);
    if (a == b) throw Error(ErrorCode::LoopEdge, "loop at vertex '" + x + "'");
    if (a > b) std::swap(a, b);
    if (g.adj_[a * n + b]) throw Error(ErrorCode::DuplicateEdge, "edge " + x + "-" + y + " listed twice");
    g.adj_[a * n + b] = g.adj_[b * n + a] = 1;
    g.edges_.push_back({a, b});
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  g.rotation_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (g.adj_[v * n + w]) g.rotation_[v].push_back(w);
  if (raw.fatgraph) {
    for (const auto& [vid, order] : *raw.fatgraph) {
      std::size_t v = lookup(vid);
      std::vector<std::size_t> cyc;
      for (const auto& wid : order) {
        std::size_t w = lookup(wid);
        if (!g.adj_[v * n + w])
          throw Error(ErrorCode::FatgraphNotPermutation, "fatgraph entry of '" + vid + "' lists non-neighbor '" + wid + "'");
        cyc.push_back(w);
      }
      std::vector<std::size_t> sorted = cyc;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != g.rotation_[v] || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::FatgraphNotPermutation, "fatgraph entry of '" + vid + "' is not a permutation of its neighbors");
      g.rotation_[v] = std::move(cyc);
    }
  }
  for (auto& cyc : g.rotation_) canonical_rotation(cyc);
  return g;
}

std::optional<std::size_t> MixedSignGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return i;
  return std::nullopt;
}

RawGraph MixedSignGraph::to_raw() const {
  RawGraph raw;
  for (std::size_t i = 0; i < ids_.size(); ++i) raw.vertices.push_back({ids_[i], signs_[i]});
  for (const auto& e : edges_) raw.edges.emplace_back(ids_[e.a], ids_[e.b]);
  raw.fatgraph.emplace();
  for (std::size_t v = 0; v < ids_.size(); ++v) {
    if (rotation_[v].empty()) continue;
    auto& out = (*raw.fatgraph)[ids_[v]];
    for (std::size_t w : rotation_[v]) out.push_back(ids_[w]);
  }
  return raw;
}

IntMatrix adjacency_matrix(const MixedSignGraph& g) {
  IntMatrix a(g.size());
  for (const auto& e : g.edges()) a(e.a, e.b) = a(e.b, e.a) = 1;
  return a;
}

std::optional<Bipartition> bipartition(const MixedSignGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : g.rotation(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (std::size_t v = 0; v < n; ++v) (color[v] == 0 ? b.first : b.second).push_back(v);
  return b;
}

bool is_bipartite(const MixedSignGraph& g) { return bipartition(g).has_value(); }

MixedSignGraph reorder(const MixedSignGraph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.size();
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> iota(n);
  std::iota(iota.begin(), iota.end(), 0);
  if (sorted != iota) throw Error(ErrorCode::BadParameters, "reorder needs a permutation of the vertices");
  RawGraph raw;
  for (std::size_t old : order) raw.vertices.push_back({g.id(old), g.sign(old)});
  for (const auto& e : g.edges()) raw.edges.emplace_back(g.id(e.a), g.id(e.b));
  raw.fatgraph.emplace();
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    auto& out = (*raw.fatgraph)[g.id(v)];
    for (std::size_t w : g.rotation(v)) out.push_back(g.id(w));
  }
  return MixedSignGraph::validate(raw);
}

MixedSignGraph with_signs(const MixedSignGraph& g, const std::vector<int>& signs) {
  if (signs.size() != g.size()) throw Error(ErrorCode::BadParameters, "one sign per vertex required");
  RawGraph raw = g.to_raw();
  for (std::size_t i = 0; i < signs.size(); ++i) raw.vertices[i].sign = signs[i];
  return MixedSignGraph::validate(raw);
}

MixedSignGraph bipartite_ordering(const MixedSignGraph& g) {
  auto parts = bipartition(g);
  if (!parts) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
  std::vector<std::size_t> order = parts->first;
  order.insert(order.end(), parts->second.begin(), parts->second.end());
  return reorder(g, order);
}

std::vector<std::vector<std::size_t>> connected_components(const MixedSignGraph& g) {
  const std::size_t n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : g.rotation(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const MixedSignGraph& g) { return connected_components(g).size() <= 1; }

}  // namespace mixsign
