#ifndef HGMORPH_FILTERS_HPP
#define HGMORPH_FILTERS_HPP

#include "hgmorph/composed.hpp"

namespace hgmorph {

// Openings and closings on the three lattices. The whole-step filters
// compose the one-lattice dilation/erosion pairs; the half-step filters
// make a single crossing between the vertex and edge lattices.

inline VertexSet vertex_open_1(const VertexSet& xv) { return vertex_dilate(vertex_erode(xv)); }
inline VertexSet vertex_close_1(const VertexSet& xv) { return vertex_erode(vertex_dilate(xv)); }

inline EdgeSet edge_open_1(const EdgeSet& xe) { return edge_dilate(edge_erode(xe)); }
inline EdgeSet edge_close_1(const EdgeSet& xe) { return edge_erode(edge_dilate(xe)); }

/// Half-opening on vertex sets: the union of all edges contained in Xv.
inline VertexSet vertex_open_half(const VertexSet& xv) {
  return vertex_dilate_from_edges(edge_erode_from_vertices(xv));
}
inline VertexSet vertex_close_half(const VertexSet& xv) {
  return vertex_erode_from_edges(edge_dilate_from_vertices(xv));
}

inline EdgeSet edge_open_half(const EdgeSet& xe) {
  return edge_dilate_from_vertices(vertex_erode_from_edges(xe));
}
/// Half-closing on edge sets: all edges covered by the union of member-edge
/// vertex sets.
inline EdgeSet edge_close_half(const EdgeSet& xe) {
  return edge_erode_from_vertices(vertex_dilate_from_edges(xe));
}

inline SubHypergraph hg_open_1(const SubHypergraph& x) {
  return SubHypergraph::unchecked(vertex_open_1(x.vertices()), edge_open_1(x.edges()));
}
inline SubHypergraph hg_close_1(const SubHypergraph& x) {
  return SubHypergraph::unchecked(vertex_close_1(x.vertices()), edge_close_1(x.edges()));
}
inline SubHypergraph hg_open_half(const SubHypergraph& x) {
  return SubHypergraph::unchecked(vertex_open_half(x.vertices()), edge_open_half(x.edges()));
}
inline SubHypergraph hg_close_half(const SubHypergraph& x) {
  return SubHypergraph::unchecked(vertex_close_half(x.vertices()), edge_close_half(x.edges()));
}

/// Half-step count of a parametric filter: lambda = 2*whole + half.
struct GranulometryIndex {
  unsigned lambda = 0;

  constexpr GranulometryIndex() = default;
  constexpr GranulometryIndex(unsigned l) : lambda(l) {}

  constexpr unsigned whole() const { return lambda / 2; }  // full dilation/erosion pairs
  constexpr unsigned half() const { return lambda % 2; }   // one extra half-step
};

/// Parametric opening: dilate^i after open_half^j after erode^i, where
/// i = lambda div 2 and j = lambda mod 2. lambda 0, 1, 2 give the identity,
/// the half-opening and the whole opening.
inline SubHypergraph granule_open(const SubHypergraph& x, GranulometryIndex g) {
  SubHypergraph r = apply_iterated([](const SubHypergraph& s) { return hg_erode(s); }, x, g.whole());
  if (g.half()) r = hg_open_half(r);
  return apply_iterated([](const SubHypergraph& s) { return hg_dilate(s); }, r, g.whole());
}

/// Parametric closing, the adjoint mirror: erode^i after close_half^j after
/// dilate^i.
inline SubHypergraph granule_close(const SubHypergraph& x, GranulometryIndex g) {
  SubHypergraph r = apply_iterated([](const SubHypergraph& s) { return hg_dilate(s); }, x, g.whole());
  if (g.half()) r = hg_close_half(r);
  return apply_iterated([](const SubHypergraph& s) { return hg_erode(s); }, r, g.whole());
}

/// Alternating sequential filter: opening after closing at each level up to
/// lambda, growing from the finest level. asf(x, 0) is x itself.
inline SubHypergraph asf(const SubHypergraph& x, GranulometryIndex g) {
  SubHypergraph r = x;
  for (unsigned level = 1; level <= g.lambda; ++level) {
    r = granule_open(granule_close(r, level), level);
  }
  return r;
}

}  // namespace hgmorph

#endif  // HGMORPH_FILTERS_HPP
