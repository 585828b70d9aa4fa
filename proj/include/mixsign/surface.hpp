#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mixsign/graph.hpp"

namespace mixsign {

// Half-edge ends at a crossing, in counterclockwise order. "Lower" is the
// curve of the endpoint that comes first in the global ordering.
enum class Slot : std::uint8_t { LowerOut = 0, UpperOut = 1, LowerIn = 2, UpperIn = 3 };

struct Crossing {
  std::size_t lower;
  std::size_t upper;
};

// Dart d = 4 * crossing + slot.
struct RibbonModel {
  std::vector<Crossing> crossings;  // one per edge, same order as g.edges()
  std::vector<std::vector<std::size_t>> curve_cycles;
  std::vector<std::size_t> isolated_vertices;
  std::vector<std::size_t> along_curve;  // involution on darts

  std::size_t dart_count() const { return 4 * crossings.size(); }
  static std::size_t rotation_successor(std::size_t dart) { return (dart & ~std::size_t{3}) | ((dart + 1) & 3); }
  // Boundary tracing permutation.
  std::size_t face_successor(std::size_t dart) const { return rotation_successor(along_curve[dart]); }
};

RibbonModel build_ribbon(const MixedSignGraph& g);

struct SurfaceInvariants {
  long euler_char = 0;
  std::size_t boundary_count = 0;
  std::size_t genus = 0;
  std::size_t components = 0;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

SurfaceInvariants surface_invariants(const MixedSignGraph& g);
SurfaceInvariants closure_invariants(const SurfaceInvariants& inv, std::size_t fill);
SurfaceInvariants gamma_mn_invariants(unsigned m, unsigned n);

}  // namespace mixsign
