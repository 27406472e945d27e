#ifndef HGMORPH_COMPOSED_HPP
#define HGMORPH_COMPOSED_HPP

#include <utility>

#include "hgmorph/correspondence.hpp"

namespace hgmorph {

// Composed dilations and erosions on the three lattices. The compositions
// are the ground truth; the closed forms live in oracle.hpp and are checked
// for equality against these. In particular vertex_erode keeps vertices
// with no incident edge (the composition includes them vacuously).

/// Vertex dilation: all vertices sharing some hyperedge with Xv.
inline VertexSet vertex_dilate(const VertexSet& xv) {
  return vertex_dilate_from_edges(edge_dilate_from_vertices(xv));
}

/// Vertex erosion: vertices whose every incident edge is contained in Xv.
inline VertexSet vertex_erode(const VertexSet& xv) {
  return vertex_erode_from_edges(edge_erode_from_vertices(xv));
}

/// Hyperedge dilation: all edges meeting some member edge.
inline EdgeSet edge_dilate(const EdgeSet& xe) {
  return edge_dilate_from_vertices(vertex_dilate_from_edges(xe));
}

/// Hyperedge erosion: member edges disjoint from every non-member edge.
inline EdgeSet edge_erode(const EdgeSet& xe) {
  return edge_erode_from_vertices(vertex_erode_from_edges(xe));
}

/// Subhypergraph dilation, componentwise. The output satisfies the cover
/// condition; unchecked() asserts it in validating builds.
inline SubHypergraph hg_dilate(const SubHypergraph& x) {
  return SubHypergraph::unchecked(vertex_dilate(x.vertices()), edge_dilate(x.edges()));
}

/// Subhypergraph erosion, componentwise.
inline SubHypergraph hg_erode(const SubHypergraph& x) {
  return SubHypergraph::unchecked(vertex_erode(x.vertices()), edge_erode(x.edges()));
}

/// n-fold self-composition with exact early exit: once op(x) == x every
/// further application is the identity.
template <class Op, class T>
T apply_iterated(Op&& op, T x, unsigned n) {
  for (unsigned k = 0; k < n; ++k) {
    T next = op(x);
    if (next == x) return x;
    x = std::move(next);
  }
  return x;
}

/// The i-fold power of an operator as a new operator; iterate(op, 0) is the
/// identity.
template <class Op>
auto iterate(Op op, unsigned n) {
  return [op = std::move(op), n](const auto& x) { return apply_iterated(op, x, n); };
}

}  // namespace hgmorph

#endif  // HGMORPH_COMPOSED_HPP
