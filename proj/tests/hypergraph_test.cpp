#include "hgmorph/hypergraph.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "test_support.hpp"

namespace hgmorph {
namespace {

using testing::es;
using testing::make_h0;
using testing::make_h1;
using testing::make_h2;
using testing::sub;
using testing::vs;

std::vector<VertexId> edge_members(const Hypergraph& h, EdgeId i) {
  auto [b, e] = h.edge_vertices(i);
  return {b, e};
}

std::vector<EdgeId> incident_edges(const Hypergraph& h, VertexId x) {
  auto [b, e] = h.incidence(x);
  return {b, e};
}

TEST(Hypergraph, BuildFromIndices) {
  Hypergraph h = make_h0();
  EXPECT_EQ(h.vertex_count(), 5u);
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(edge_members(h, 0), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(edge_members(h, 1), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(edge_members(h, 2), (std::vector<VertexId>{3, 4}));
  EXPECT_EQ(h.vertex_label(1), "1");
  EXPECT_EQ(h.edge_id(2), "e2");
}

TEST(Hypergraph, EdgeMembersSortedAndDeduplicated) {
  Hypergraph h = Hypergraph::from_indices(4, {{3, 1, 3, 0}});
  EXPECT_EQ(edge_members(h, 0), (std::vector<VertexId>{0, 1, 3}));
  EXPECT_EQ(h.edge_size(0), 3u);
}

TEST(Hypergraph, IncidenceIsTransposeOfMembership) {
  Hypergraph h = make_h0();
  EXPECT_EQ(incident_edges(h, 0), (std::vector<EdgeId>{0}));
  EXPECT_EQ(incident_edges(h, 1), (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(incident_edges(h, 3), (std::vector<EdgeId>{1, 2}));
  // Two-way agreement on every pin.
  for (VertexId x = 0; x < h.vertex_count(); ++x)
    for (EdgeId i : incident_edges(h, x)) {
      auto members = edge_members(h, i);
      EXPECT_NE(std::find(members.begin(), members.end(), x), members.end());
    }
  std::size_t pins = 0;
  for (VertexId x = 0; x < h.vertex_count(); ++x) pins += incident_edges(h, x).size();
  EXPECT_EQ(pins, 7u);
}

TEST(Hypergraph, IncidenceSizeCountsVerticesEdgesAndPins) {
  EXPECT_EQ(make_h0().incidence_size(), 5u + 3u + 7u);
  EXPECT_EQ(make_h1().incidence_size(), 3u + 1u + 2u);
}

TEST(Hypergraph, DuplicateEdgeVertexSetsAreDistinctEdges) {
  // Identity is the index, not the member set.
  Hypergraph h = Hypergraph::from_indices(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(edge_members(h, 0), edge_members(h, 1));
  EXPECT_EQ(h.edge_id(0), "e0");
  EXPECT_EQ(h.edge_id(1), "e1");
}

TEST(Hypergraph, EmptyEdgesAreKeptAndCounted) {
  Hypergraph h = Hypergraph::from_indices(2, {{}, {0}, {}});
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(h.empty_edge_count(), 2u);
  EXPECT_EQ(h.edge_size(0), 0u);
  EXPECT_EQ(make_h0().empty_edge_count(), 0u);
}

TEST(Hypergraph, FromLabels) {
  Hypergraph h = Hypergraph::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}},
                                         {"left", "right"});
  EXPECT_EQ(h.find_vertex("b"), 1u);
  EXPECT_EQ(h.find_edge("right"), 1u);
  EXPECT_EQ(h.find_vertex("missing"), h.vertex_count());
  EXPECT_EQ(h.find_edge("missing"), h.edge_count());
}

TEST(Hypergraph, BuildRejectsBadInput) {
  EXPECT_THROW(Hypergraph::from_indices(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::from_labels({"a", "a"}, {}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::from_labels({"a"}, {{"b"}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::from_indices(1, {{0}, {0}}, {}, {"e", "e"}),
               std::invalid_argument);
}

TEST(IndexSet, FactoriesAndMembership) {
  Hypergraph h = make_h0();
  VertexSet a = vs(h, {0, 3});
  EXPECT_TRUE(a.contains(0));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a.count(), 2u);
  EXPECT_EQ(VertexSet::empty(h).count(), 0u);
  EXPECT_EQ(VertexSet::full(h).count(), 5u);
  EXPECT_EQ(EdgeSet::full(h).count(), 3u);
  EXPECT_EQ(VertexSet::from_mask(h, 0b01001), a);
  EXPECT_EQ(a.members(), (std::vector<std::size_t>{0, 3}));
}

TEST(IndexSet, AddRemoveBoundsChecked) {
  Hypergraph h = make_h1();
  VertexSet a = VertexSet::empty(h);
  a.add(2);
  EXPECT_TRUE(a.contains(2));
  a.remove(2);
  EXPECT_FALSE(a.contains(2));
  EXPECT_THROW(a.add(3), std::invalid_argument);
  EXPECT_THROW(EdgeSet::empty(h).add(1), std::invalid_argument);
}

TEST(IndexSet, AlgebraAndComplement) {
  Hypergraph h = make_h0();
  VertexSet a = vs(h, {0, 1, 2});
  VertexSet b = vs(h, {2, 3});
  EXPECT_EQ(a | b, vs(h, {0, 1, 2, 3}));
  EXPECT_EQ(a & b, vs(h, {2}));
  VertexSet d = a;
  d -= b;
  EXPECT_EQ(d, vs(h, {0, 1}));
  EXPECT_EQ(a.complement(), vs(h, {3, 4}));
  EXPECT_EQ(a.complement().complement(), a);
  EXPECT_TRUE(vs(h, {2}).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(vs(h, {0}).intersects(b));
}

TEST(IndexSet, ToString) {
  Hypergraph h = make_h0();
  EXPECT_EQ(vs(h, {0, 2, 4}).to_string(), "{0,2,4}");
  EXPECT_EQ(es(h, {1}).to_string(), "{e1}");
  EXPECT_EQ(VertexSet::empty(h).to_string(), "{}");
}

TEST(SubHypergraph, CoverConditionEnforced) {
  Hypergraph h = make_h0();
  EXPECT_NO_THROW(sub(h, {0, 1}, {0}));
  EXPECT_NO_THROW(sub(h, {0, 1, 2}, {0}));
  // e1 = {1,2,3} is not contained in {0,1}.
  EXPECT_THROW(sub(h, {0, 1}, {1}), std::invalid_argument);
  EXPECT_THROW(sub(h, {}, {0}), std::invalid_argument);
  EXPECT_TRUE(is_subhypergraph(vs(h, {3, 4}), es(h, {2})));
  EXPECT_FALSE(is_subhypergraph(vs(h, {4}), es(h, {2})));
}

TEST(SubHypergraph, EmptyFullOrderingEquality) {
  Hypergraph h = make_h2();
  SubHypergraph lo = SubHypergraph::empty(h);
  SubHypergraph hi = SubHypergraph::full(h);
  EXPECT_TRUE(lo.is_subset_of(hi));
  EXPECT_FALSE(hi.is_subset_of(lo));
  SubHypergraph mid = sub(h, {0, 1}, {0});
  EXPECT_TRUE(lo.is_subset_of(mid) && mid.is_subset_of(hi));
  // Componentwise order: vertex parts comparable, edge parts not.
  EXPECT_FALSE(sub(h, {0, 1}, {0}).is_subset_of(sub(h, {0, 1, 2}, {1})));
  EXPECT_EQ(mid, sub(h, {0, 1}, {0}));
  EXPECT_NE(mid, sub(h, {0, 1}, {}));
}

TEST(SubHypergraph, InducedByVerticesIsLargest) {
  Hypergraph h = make_h0();
  SubHypergraph s = induced_by_vertices(vs(h, {0, 1, 2, 3}));
  EXPECT_EQ(s.vertices(), vs(h, {0, 1, 2, 3}));
  EXPECT_EQ(s.edges(), es(h, {0, 1}));
  EXPECT_EQ(induced_by_vertices(vs(h, {0, 2})).edges(), EdgeSet::empty(h));
  EXPECT_EQ(induced_by_vertices(VertexSet::full(h)).edges(), EdgeSet::full(h));
  // Largest: any valid pair on the same vertex part has fewer or equal edges.
  EXPECT_TRUE(es(h, {0}).is_subset_of(induced_by_vertices(vs(h, {0, 1, 2, 3})).edges()));
}

TEST(SubHypergraph, InducedByEdgesIsSmallest) {
  Hypergraph h = make_h0();
  SubHypergraph s = induced_by_edges(es(h, {0, 2}));
  EXPECT_EQ(s.vertices(), vs(h, {0, 1, 3, 4}));
  EXPECT_EQ(s.edges(), es(h, {0, 2}));
  EXPECT_EQ(induced_by_edges(EdgeSet::empty(h)).vertices(), VertexSet::empty(h));
  // Smallest: the vertex part is exactly the union of member edges.
  EXPECT_EQ(induced_by_edges(es(h, {1})).vertices(), vs(h, {1, 2, 3}));
}

TEST(SubHypergraph, CrossGraphOperationsRejected) {
  Hypergraph a = make_h0();
  Hypergraph b = make_h0();
  EXPECT_THROW(is_subhypergraph(vs(a, {0}), es(b, {0})), std::invalid_argument);
}

TEST(Hypergraph, EqualityComparesStructureAndNames) {
  EXPECT_EQ(make_h0(), make_h0());
  EXPECT_NE(make_h0(), make_h1());
  Hypergraph renamed = Hypergraph::from_indices(5, {{0, 1}, {1, 2, 3}, {3, 4}},
                                                {"a", "b", "c", "d", "e"});
  EXPECT_NE(make_h0(), renamed);
}

}  // namespace
}  // namespace hgmorph
