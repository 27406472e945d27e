#ifndef HGMORPH_ORACLE_HPP
#define HGMORPH_ORACLE_HPP

#include <stdexcept>

#include "hgmorph/hypergraph.hpp"

namespace hgmorph::oracle {

// Definitional forms of the correspondence operators, each phrased as an
// induced-hypergraph construction (or the complement of one). These are the
// reference route the fast loops in correspondence.hpp are checked against.

/// (delta_v(Xe), Xe) is the hypergraph induced by the edge set.
inline VertexSet delta_v(const EdgeSet& xe) { return induced_by_edges(xe).vertices(); }

/// (Xv, eps_e(Xv)) is the hypergraph induced by the vertex set.
inline EdgeSet eps_e(const VertexSet& xv) { return induced_by_vertices(xv).edges(); }

/// The complement pair: build the hypergraph induced by the complement edge
/// set and complement its vertex part.
inline VertexSet eps_v(const EdgeSet& xe) {
  return induced_by_edges(xe.complement()).vertices().complement();
}

/// Build the hypergraph induced by the complement vertex set and complement
/// its edge part.
inline EdgeSet delta_e(const VertexSet& xv) {
  return induced_by_vertices(xv.complement()).edges().complement();
}

// Closed forms of the composed operators, written as direct quantifier
// loops so they share no code with the compositions they are compared to.

/// x such that some incident edge meets Xv.
inline VertexSet closed_vertex_dilate(const VertexSet& xv) {
  const Hypergraph& h = xv.graph();
  VertexSet out = VertexSet::empty(h);
  for (std::size_t x = 0; x < h.vertex_count(); ++x) {
    auto [ib, ie] = h.incidence(static_cast<VertexId>(x));
    for (const EdgeId* p = ib; p != ie; ++p) {
      auto [vb, ve] = h.edge_vertices(*p);
      bool meets = false;
      for (const VertexId* q = vb; q != ve && !meets; ++q) meets = xv.contains(*q);
      if (meets) {
        out.add(x);
        break;
      }
    }
  }
  return out;
}

/// x (over all of Hv) such that every incident edge is contained in Xv;
/// vertices with no incident edge qualify vacuously.
inline VertexSet closed_vertex_erode(const VertexSet& xv) {
  const Hypergraph& h = xv.graph();
  VertexSet out = VertexSet::empty(h);
  for (std::size_t x = 0; x < h.vertex_count(); ++x) {
    auto [ib, ie] = h.incidence(static_cast<VertexId>(x));
    bool all_inside = true;
    for (const EdgeId* p = ib; p != ie && all_inside; ++p) {
      auto [vb, ve] = h.edge_vertices(*p);
      for (const VertexId* q = vb; q != ve && all_inside; ++q) all_inside = xv.contains(*q);
    }
    if (all_inside) out.add(x);
  }
  return out;
}

/// e_i such that v(e_i) meets v(e_j) for some member edge e_j.
inline EdgeSet closed_edge_dilate(const EdgeSet& xe) {
  const Hypergraph& h = xe.graph();
  EdgeSet out = EdgeSet::empty(h);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    bool meets = false;
    auto [vb, ve] = h.edge_vertices(static_cast<EdgeId>(i));
    xe.for_each([&](std::size_t j) {
      auto [wb, we] = h.edge_vertices(static_cast<EdgeId>(j));
      for (const VertexId* q = vb; q != ve && !meets; ++q)
        for (const VertexId* r = wb; r != we && !meets; ++r) meets = (*q == *r);
    });
    if (meets) out.add(i);
  }
  return out;
}

/// Member edges disjoint from every non-member edge.
inline EdgeSet closed_edge_erode(const EdgeSet& xe) {
  const Hypergraph& h = xe.graph();
  EdgeSet out = EdgeSet::empty(h);
  xe.for_each([&](std::size_t j) {
    auto [wb, we] = h.edge_vertices(static_cast<EdgeId>(j));
    bool disjoint = true;
    for (std::size_t i = 0; i < h.edge_count() && disjoint; ++i) {
      if (xe.contains(i)) continue;
      auto [vb, ve] = h.edge_vertices(static_cast<EdgeId>(i));
      for (const VertexId* q = wb; q != we && disjoint; ++q)
        for (const VertexId* r = vb; r != ve && disjoint; ++r) disjoint = (*q != *r);
    }
    if (disjoint) out.add(j);
  });
  return out;
}

/// Union formula for the vertex half-opening: the union of all edges
/// contained in Xv.
inline VertexSet closed_vertex_open_half(const VertexSet& xv) {
  const Hypergraph& h = xv.graph();
  VertexSet out = VertexSet::empty(h);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto [vb, ve] = h.edge_vertices(static_cast<EdgeId>(i));
    bool inside = true;
    for (const VertexId* q = vb; q != ve && inside; ++q) inside = xv.contains(*q);
    if (inside)
      for (const VertexId* q = vb; q != ve; ++q) out.bits().set(*q);
  }
  return out;
}

/// Membership formula for the same operator: x in Xv witnessed by an
/// incident edge contained in Xv.
inline VertexSet membership_vertex_open_half(const VertexSet& xv) {
  const Hypergraph& h = xv.graph();
  VertexSet out = VertexSet::empty(h);
  xv.for_each([&](std::size_t x) {
    auto [ib, ie] = h.incidence(static_cast<VertexId>(x));
    for (const EdgeId* p = ib; p != ie; ++p) {
      auto [vb, ve] = h.edge_vertices(*p);
      bool inside = true;
      for (const VertexId* q = vb; q != ve && inside; ++q) inside = xv.contains(*q);
      if (inside) {
        out.add(x);
        return;
      }
    }
  });
  return out;
}

/// Containment formula for the edge half-closing: edges covered by the
/// union of member-edge vertex sets.
inline EdgeSet closed_edge_close_half(const EdgeSet& xe) {
  const Hypergraph& h = xe.graph();
  Bitset covered(h.vertex_count());
  xe.for_each([&](std::size_t j) {
    auto [wb, we] = h.edge_vertices(static_cast<EdgeId>(j));
    for (const VertexId* q = wb; q != we; ++q) covered.set(*q);
  });
  EdgeSet out = EdgeSet::empty(h);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto [vb, ve] = h.edge_vertices(static_cast<EdgeId>(i));
    bool inside = true;
    for (const VertexId* q = vb; q != ve && inside; ++q) inside = covered.test(*q);
    if (inside) out.add(i);
  }
  return out;
}

// Exhaustive enumeration of the three lattices, for universes of at most
// 20 elements per side.

inline void require_enumerable(const Hypergraph& h) {
  if (h.vertex_count() > 20 || h.edge_count() > 20)
    throw std::invalid_argument("universe too large for exhaustive enumeration");
}

template <class Fn>
void for_each_vertex_subset(const Hypergraph& h, Fn&& fn) {
  require_enumerable(h);
  const uint64_t limit = uint64_t{1} << h.vertex_count();
  for (uint64_t mask = 0; mask < limit; ++mask) fn(VertexSet::from_mask(h, mask));
}

template <class Fn>
void for_each_edge_subset(const Hypergraph& h, Fn&& fn) {
  require_enumerable(h);
  const uint64_t limit = uint64_t{1} << h.edge_count();
  for (uint64_t mask = 0; mask < limit; ++mask) fn(EdgeSet::from_mask(h, mask));
}

/// Yields exactly the pairs satisfying the cover condition: for each edge
/// set, the vertex part ranges over the union of its edges plus any subset
/// of the remaining vertices.
template <class Fn>
void for_each_subhypergraph(const Hypergraph& h, Fn&& fn) {
  require_enumerable(h);
  const uint64_t edge_limit = uint64_t{1} << h.edge_count();
  for (uint64_t emask = 0; emask < edge_limit; ++emask) {
    EdgeSet eset = EdgeSet::from_mask(h, emask);
    uint64_t base = 0;
    eset.for_each([&](std::size_t i) {
      auto [vb, ve] = h.edge_vertices(static_cast<EdgeId>(i));
      for (const VertexId* q = vb; q != ve; ++q) base |= uint64_t{1} << *q;
    });
    uint64_t free = ((h.vertex_count() == 64 ? ~uint64_t{0}
                                             : (uint64_t{1} << h.vertex_count()) - 1)) &
                    ~base;
    // Standard submask walk, descending; emitted ascending via xor with free.
    uint64_t sub = free;
    while (true) {
      fn(SubHypergraph::unchecked(VertexSet::from_mask(h, base | (free ^ sub)),
                                  eset));
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
}

inline uint64_t count_subhypergraphs(const Hypergraph& h) {
  uint64_t n = 0;
  for_each_subhypergraph(h, [&](const SubHypergraph&) { ++n; });
  return n;
}

}  // namespace hgmorph::oracle

#endif  // HGMORPH_ORACLE_HPP
