#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixsign/graph.hpp"

namespace mixsign {

struct JoinSpec {
  MixedSignGraph left;
  MixedSignGraph right;
  std::string left_vertex;
  std::string right_vertex;  // id in `right` before any renaming
  // The new neighbor is inserted after this neighbor in the cyclic order;
  // defaults to the last neighbor.
  std::optional<std::string> left_after;
  std::optional<std::string> right_after;
};

// Disjoint union plus one edge. Right-hand ids that collide with left-hand
// ids get a "'" appended until unique.
MixedSignGraph join(const JoinSpec& spec);

// Joins a path of k new vertices, all with the sign of v, at v.
MixedSignGraph attach_tail(const MixedSignGraph& g, const std::string& v, unsigned k);

// Triangulated (m-1)-wide grid with k*m - 1 rows (one more if extended),
// all signs -1, row-major order.
MixedSignGraph twist_graph(unsigned m, unsigned k, bool extended = false);

// eps[i] != 0 copies of vertex i with sign sgn(eps[i]).
MixedSignGraph expand_multiplicity(const MixedSignGraph& g, const std::vector<long>& eps);

// Path on m+n vertices, first m signed +1, last n signed -1.
MixedSignGraph gamma_mn(unsigned m, unsigned n);

// The figure-only family Gamma_k; always throws NotReconstructible.
MixedSignGraph asymptotic_family(unsigned k);

// Named graphs, natural vertex order, default fatgraph.
MixedSignGraph path_graph(std::size_t n, int sign = 1);
MixedSignGraph cycle_graph(std::size_t n, int sign = 1);
MixedSignGraph star_graph(std::size_t leaves, int sign = 1);
MixedSignGraph dynkin_D(std::size_t n, int sign = 1);
// T_{2,3,n-3}: arms of 1, 2 and n-4 vertices around a center. n = 6, 7, 8, 10, ...
MixedSignGraph dynkin_E(std::size_t n, int sign = 1);

}  // namespace mixsign
