#ifndef HGMORPH_CORRESPONDENCE_HPP
#define HGMORPH_CORRESPONDENCE_HPP

#include "hgmorph/hypergraph.hpp"

namespace hgmorph {

// The four vertex <-> hyperedge correspondence operators. Each runs in
// time linear in the touched incidence plus the output mask. An empty
// hyperedge is a member of edge_erode_from_vertices(Xv) for every Xv
// (vacuous containment) and never a member of edge_dilate_from_vertices.

/// Vertex dilation from an edge set: the union of member-edge vertex sets.
inline VertexSet vertex_dilate_from_edges(const EdgeSet& xe) {
  const Hypergraph& h = xe.graph();
  VertexSet out = VertexSet::empty(h);
  xe.for_each([&](std::size_t i) {
    auto [b, e] = h.edge_vertices(static_cast<EdgeId>(i));
    for (const VertexId* p = b; p != e; ++p) out.bits().set(*p);
  });
  return out;
}

/// Edge erosion from a vertex set: all edges whose vertex set is contained
/// in Xv.
inline EdgeSet edge_erode_from_vertices(const VertexSet& xv) {
  const Hypergraph& h = xv.graph();
  EdgeSet out = EdgeSet::empty(h);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto [b, e] = h.edge_vertices(static_cast<EdgeId>(i));
    bool inside = true;
    for (const VertexId* p = b; p != e && inside; ++p) inside = xv.contains(*p);
    if (inside) out.bits().set(i);
  }
  return out;
}

/// Vertex erosion from an edge set: vertices belonging to no edge outside
/// Xe. Computed as Hv minus the union of non-member edges (De Morgan form
/// of the intersection of complements).
inline VertexSet vertex_erode_from_edges(const EdgeSet& xe) {
  const Hypergraph& h = xe.graph();
  Bitset outside(h.vertex_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (xe.contains(i)) continue;
    auto [b, e] = h.edge_vertices(static_cast<EdgeId>(i));
    for (const VertexId* p = b; p != e; ++p) outside.set(*p);
  }
  return VertexSet(h, outside.complement());
}

/// Edge dilation from a vertex set: all edges meeting Xv, found by scanning
/// the incidence lists of member vertices.
inline EdgeSet edge_dilate_from_vertices(const VertexSet& xv) {
  const Hypergraph& h = xv.graph();
  EdgeSet out = EdgeSet::empty(h);
  xv.for_each([&](std::size_t x) {
    auto [b, e] = h.incidence(static_cast<VertexId>(x));
    for (const EdgeId* p = b; p != e; ++p) out.bits().set(*p);
  });
  return out;
}

}  // namespace hgmorph

#endif  // HGMORPH_CORRESPONDENCE_HPP
