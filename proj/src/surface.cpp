#include "mixsign/surface.hpp"

#include <map>

#include "mixsign/constructions.hpp"

namespace mixsign {

namespace {

std::size_t dart(std::size_t crossing, Slot s) { return 4 * crossing + static_cast<std::size_t>(s); }

}  // namespace

RibbonModel build_ribbon(const MixedSignGraph& g) {
  RibbonModel r;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> crossing_of;
  for (const auto& e : g.edges()) {
    crossing_of[{e.a, e.b}] = r.crossings.size();
    r.crossings.push_back({e.a, e.b});
  }
  r.along_curve.assign(r.dart_count(), 0);
  r.curve_cycles.assign(g.size(), {});
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) {
      r.isolated_vertices.push_back(v);
      continue;
    }
    auto& cyc = r.curve_cycles[v];
    for (std::size_t w : rot) cyc.push_back(crossing_of.at({std::min(v, w), std::max(v, w)}));
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::size_t here = cyc[k], next = cyc[(k + 1) % cyc.size()];
      bool lower_here = r.crossings[here].lower == v;
      bool lower_next = r.crossings[next].lower == v;
      std::size_t out = dart(here, lower_here ? Slot::LowerOut : Slot::UpperOut);
      std::size_t in = dart(next, lower_next ? Slot::LowerIn : Slot::UpperIn);
      r.along_curve[out] = in;
      r.along_curve[in] = out;
    }
  }
  return r;
}

SurfaceInvariants surface_invariants(const MixedSignGraph& g) {
  RibbonModel r = build_ribbon(g);
  auto comps = connected_components(g);
  std::vector<std::size_t> comp_of(g.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t v : comps[c]) comp_of[v] = c;

  std::vector<long> edges(comps.size(), 0);
  for (const auto& cr : r.crossings) ++edges[comp_of[cr.lower]];
  std::vector<std::size_t> faces(comps.size(), 0);
  std::vector<char> seen(r.dart_count(), 0);
  for (std::size_t d = 0; d < r.dart_count(); ++d) {
    if (seen[d]) continue;
    ++faces[comp_of[r.crossings[d / 4].lower]];
    for (std::size_t x = d; !seen[x]; x = r.face_successor(x)) seen[x] = 1;
  }

  SurfaceInvariants inv;
  inv.components = comps.size();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    long chi = -edges[c];
    std::size_t b = edges[c] == 0 ? 2 : faces[c];
    long twice_genus = 2 - chi - static_cast<long>(b);
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw Error(ErrorCode::InternalInconsistency, "face tracing produced an impossible boundary count");
    inv.euler_char += chi;
    inv.boundary_count += b;
    inv.genus += static_cast<std::size_t>(twice_genus / 2);
  }
  return inv;
}

SurfaceInvariants closure_invariants(const SurfaceInvariants& inv, std::size_t fill) {
  if (fill > inv.boundary_count)
    throw Error(ErrorCode::FillTooLarge, "cannot fill " + std::to_string(fill) + " of " +
                                             std::to_string(inv.boundary_count) + " boundary components");
  SurfaceInvariants out = inv;
  out.boundary_count -= fill;
  out.euler_char += static_cast<long>(fill);
  return out;
}

SurfaceInvariants gamma_mn_invariants(unsigned m, unsigned n) { return surface_invariants(gamma_mn(m, n)); }

}  // namespace mixsign
