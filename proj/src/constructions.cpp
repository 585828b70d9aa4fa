#include "mixsign/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mixsign {

namespace {

RawVertex vertex(std::string id, long sign) { return RawVertex{std::move(id), sign}; }

// Inserts `id` after `after` (or at the end) in a cyclic order.
void insert_neighbor(std::vector<std::string>& cyc, const std::string& id, const std::optional<std::string>& after,
                     const std::string& owner) {
  if (!after) {
    cyc.push_back(id);
    return;
  }
  auto it = std::find(cyc.begin(), cyc.end(), *after);
  if (it == cyc.end()) throw Error(ErrorCode::BadAttachment, "'" + *after + "' is not a neighbor of '" + owner + "'");
  cyc.insert(it + 1, id);
}

}  // namespace

MixedSignGraph join(const JoinSpec& spec) {
  if (!spec.left.index_of(spec.left_vertex))
    throw Error(ErrorCode::BadAttachment, "no vertex '" + spec.left_vertex + "' in the left graph");
  if (!spec.right.index_of(spec.right_vertex))
    throw Error(ErrorCode::BadAttachment, "no vertex '" + spec.right_vertex + "' in the right graph");
  RawGraph l = spec.left.to_raw();
  RawGraph r = spec.right.to_raw();

  std::set<std::string> used;
  for (const auto& v : l.vertices) used.insert(v.id);
  std::map<std::string, std::string> rename;
  std::set<std::string> right_ids;
  for (const auto& v : r.vertices) right_ids.insert(v.id);
  for (const auto& v : r.vertices) {
    std::string id = v.id;
    while (used.count(id) || (id != v.id && right_ids.count(id))) id += "'";
    used.insert(id);
    rename[v.id] = id;
  }

  RawGraph out = l;
  for (const auto& v : r.vertices) out.vertices.push_back(vertex(rename[v.id], v.sign));
  for (const auto& [a, b] : r.edges) out.edges.emplace_back(rename[a], rename[b]);
  for (const auto& [v, cyc] : *r.fatgraph) {
    auto& dst = (*out.fatgraph)[rename[v]];
    for (const auto& w : cyc) dst.push_back(rename[w]);
  }
  const std::string& v0 = spec.left_vertex;
  const std::string v1 = rename[spec.right_vertex];
  out.edges.emplace_back(v0, v1);
  std::optional<std::string> right_after;
  if (spec.right_after) {
    auto it = rename.find(*spec.right_after);
    if (it == rename.end()) throw Error(ErrorCode::BadAttachment, "no vertex '" + *spec.right_after + "' in the right graph");
    right_after = it->second;
  }
  insert_neighbor((*out.fatgraph)[v0], v1, spec.left_after, v0);
  insert_neighbor((*out.fatgraph)[v1], v0, right_after, v1);
  return MixedSignGraph::validate(out);
}

MixedSignGraph attach_tail(const MixedSignGraph& g, const std::string& v, unsigned k) {
  auto idx = g.index_of(v);
  if (!idx) throw Error(ErrorCode::BadAttachment, "no vertex '" + v + "'");
  if (k == 0) throw Error(ErrorCode::BadAttachment, "tail length must be at least 1");
  RawGraph tail;
  for (unsigned i = 1; i <= k; ++i) tail.vertices.push_back(vertex(v + "_t" + std::to_string(i), g.sign(*idx)));
  for (unsigned i = 1; i < k; ++i) tail.edges.emplace_back(tail.vertices[i - 1].id, tail.vertices[i].id);
  JoinSpec spec{g, MixedSignGraph::validate(tail), v, tail.vertices[0].id, std::nullopt, std::nullopt};
  return join(spec);
}

MixedSignGraph twist_graph(unsigned m, unsigned k, bool extended) {
  if (m < 2 || k < 1) throw Error(ErrorCode::BadParameters, "twist graph needs m >= 2 and k >= 1");
  const long cols = m - 1;
  const long rows = static_cast<long>(k) * m - 1 + (extended ? 1 : 0);
  auto id = [&](long r, long c) { return "r" + std::to_string(r) + "c" + std::to_string(c); };
  auto inside = [&](long r, long c) { return r >= 0 && r < rows && c >= 0 && c < cols; };
  RawGraph raw;
  raw.fatgraph.emplace();
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) {
      raw.vertices.push_back(vertex(id(r, c), -1));
      if (inside(r, c + 1)) raw.edges.emplace_back(id(r, c), id(r, c + 1));
      if (inside(r + 1, c)) raw.edges.emplace_back(id(r, c), id(r + 1, c));
      if (inside(r + 1, c + 1)) raw.edges.emplace_back(id(r, c), id(r + 1, c + 1));
      // Counterclockwise planar order: E, N, NW, W, S, SE.
      static const long dirs[6][2] = {{0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}};
      auto& cyc = (*raw.fatgraph)[id(r, c)];
      for (const auto& d : dirs)
        if (inside(r + d[0], c + d[1])) cyc.push_back(id(r + d[0], c + d[1]));
    }
  return MixedSignGraph::validate(raw);
}

MixedSignGraph expand_multiplicity(const MixedSignGraph& g, const std::vector<long>& eps) {
  if (eps.size() != g.size()) throw Error(ErrorCode::BadParameters, "one multiplicity per vertex required");
  std::vector<std::vector<std::string>> copies(g.size());
  RawGraph raw;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (eps[v] == 0) throw Error(ErrorCode::ZeroMultiplicity, "vertex '" + g.id(v) + "' has multiplicity 0");
    long count = eps[v] < 0 ? -eps[v] : eps[v];
    for (long j = 1; j <= count; ++j) {
      std::string id = count == 1 ? g.id(v) : g.id(v) + "_" + std::to_string(j);
      copies[v].push_back(id);
      raw.vertices.push_back(vertex(id, eps[v] > 0 ? 1 : -1));
    }
  }
  raw.fatgraph.emplace();
  for (const auto& e : g.edges())
    for (const auto& x : copies[e.a])
      for (const auto& y : copies[e.b]) raw.edges.emplace_back(x, y);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) continue;
    for (const auto& x : copies[v]) {
      auto& cyc = (*raw.fatgraph)[x];
      for (std::size_t w : g.rotation(v)) cyc.insert(cyc.end(), copies[w].begin(), copies[w].end());
    }
  }
  return MixedSignGraph::validate(raw);
}

MixedSignGraph gamma_mn(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadParameters, "gamma_mn needs m, n >= 1");
  RawGraph raw;
  for (unsigned i = 1; i <= m; ++i) raw.vertices.push_back(vertex("u" + std::to_string(i), 1));
  for (unsigned i = 1; i <= n; ++i) raw.vertices.push_back(vertex("w" + std::to_string(i), -1));
  for (std::size_t i = 1; i < raw.vertices.size(); ++i) raw.edges.emplace_back(raw.vertices[i - 1].id, raw.vertices[i].id);
  return MixedSignGraph::validate(raw);
}

MixedSignGraph asymptotic_family(unsigned k) {
  throw Error(ErrorCode::NotReconstructible,
              "the graphs Gamma_" + std::to_string(k) +
                  " are only given as a figure; use lt_ab_poly for their dilatations");
}

MixedSignGraph path_graph(std::size_t n, int sign) {
  RawGraph raw;
  for (std::size_t i = 1; i <= n; ++i) raw.vertices.push_back(vertex("v" + std::to_string(i), sign));
  for (std::size_t i = 1; i < n; ++i) raw.edges.emplace_back(raw.vertices[i - 1].id, raw.vertices[i].id);
  return MixedSignGraph::validate(raw);
}

MixedSignGraph cycle_graph(std::size_t n, int sign) {
  if (n < 3) throw Error(ErrorCode::BadParameters, "cycle needs at least 3 vertices");
  RawGraph raw = path_graph(n, sign).to_raw();
  raw.fatgraph.reset();
  raw.edges.emplace_back(raw.vertices.front().id, raw.vertices.back().id);
  return MixedSignGraph::validate(raw);
}

MixedSignGraph star_graph(std::size_t leaves, int sign) {
  RawGraph raw;
  raw.vertices.push_back(vertex("c", sign));
  for (std::size_t i = 1; i <= leaves; ++i) {
    raw.vertices.push_back(vertex("l" + std::to_string(i), sign));
    raw.edges.emplace_back("c", raw.vertices.back().id);
  }
  return MixedSignGraph::validate(raw);
}

MixedSignGraph dynkin_D(std::size_t n, int sign) {
  if (n < 4) throw Error(ErrorCode::BadParameters, "D_n needs n >= 4");
  RawGraph raw = path_graph(n - 1, sign).to_raw();
  raw.fatgraph.reset();
  raw.vertices.push_back(vertex("v" + std::to_string(n), sign));
  raw.edges.emplace_back("v" + std::to_string(n - 2), "v" + std::to_string(n));
  return MixedSignGraph::validate(raw);
}

MixedSignGraph dynkin_E(std::size_t n, int sign) {
  if (n < 6) throw Error(ErrorCode::BadParameters, "E_n needs n >= 6");
  // Long arm v1..v(n-4), center v(n-3), short arms v(n-2)-v(n-1) and v(n).
  RawGraph raw;
  for (std::size_t i = 1; i <= n; ++i) raw.vertices.push_back(vertex("v" + std::to_string(i), sign));
  auto id = [](std::size_t i) { return "v" + std::to_string(i); };
  for (std::size_t i = 1; i + 1 <= n - 3; ++i) raw.edges.emplace_back(id(i), id(i + 1));
  raw.edges.emplace_back(id(n - 3), id(n - 2));
  raw.edges.emplace_back(id(n - 2), id(n - 1));
  raw.edges.emplace_back(id(n - 3), id(n));
  return MixedSignGraph::validate(raw);
}

}  // namespace mixsign
