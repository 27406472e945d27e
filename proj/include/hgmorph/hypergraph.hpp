#ifndef HGMORPH_HYPERGRAPH_HPP
#define HGMORPH_HYPERGRAPH_HPP

#include <cassert>
#include <cstdint>
#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hgmorph/bitset.hpp"

namespace hgmorph {

using VertexId = uint32_t;
using EdgeId = uint32_t;

/// Immutable hypergraph: an ordered vertex universe plus an indexed family
/// of hyperedges. Edges carry identity by index, so two indices may hold
/// identical vertex sets. Incidence lists (vertex -> incident edge indices)
/// are precomputed at construction; nothing mutates afterwards.
///
/// Vertices are dense indices 0..n-1 internally; the label table and edge
/// id table exist for I/O and rendering only.
class Hypergraph {
 public:
  /// Build from vertex labels and per-edge label lists. Edge order is
  /// preserved (index = position). Vertex sets are stored sorted and
  /// deduplicated. Empty hyperedges are accepted; see empty_edge_count().
  static Hypergraph from_labels(const std::vector<std::string>& vertex_labels,
                                const std::vector<std::vector<std::string>>& edges,
                                std::vector<std::string> edge_ids = {}) {
    std::unordered_map<std::string, VertexId> index;
    index.reserve(vertex_labels.size());
    for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
      auto [it, inserted] = index.emplace(vertex_labels[i], static_cast<VertexId>(i));
      if (!inserted)
        throw std::invalid_argument("duplicate vertex label: " + vertex_labels[i]);
    }
    std::vector<std::vector<VertexId>> edge_indices;
    edge_indices.reserve(edges.size());
    for (const auto& edge : edges) {
      std::vector<VertexId> members;
      members.reserve(edge.size());
      for (const auto& label : edge) {
        auto it = index.find(label);
        if (it == index.end())
          throw std::invalid_argument("unknown vertex label in edge: " + label);
        members.push_back(it->second);
      }
      edge_indices.push_back(std::move(members));
    }
    return Hypergraph(vertex_labels.size(), std::move(edge_indices), vertex_labels,
                      std::move(edge_ids));
  }

  /// Build from dense vertex indices. Labels default to the decimal index,
  /// edge ids to "e<index>".
  static Hypergraph from_indices(std::size_t vertex_count,
                                 std::vector<std::vector<VertexId>> edges,
                                 std::vector<std::string> vertex_labels = {},
                                 std::vector<std::string> edge_ids = {}) {
    return Hypergraph(vertex_count, std::move(edges), std::move(vertex_labels),
                      std::move(edge_ids));
  }

  std::size_t vertex_count() const { return vertex_label_.size(); }
  std::size_t edge_count() const { return edge_begin_.size() - 1; }

  /// v(e): sorted vertex indices of edge i.
  std::pair<const VertexId*, const VertexId*> edge_vertices(EdgeId i) const {
    return {pins_.data() + edge_begin_[i], pins_.data() + edge_begin_[i + 1]};
  }
  std::size_t edge_size(EdgeId i) const { return edge_begin_[i + 1] - edge_begin_[i]; }

  /// Incident edge indices of vertex x (the transpose of edge membership).
  std::pair<const EdgeId*, const EdgeId*> incidence(VertexId x) const {
    return {incident_.data() + vertex_begin_[x], incident_.data() + vertex_begin_[x + 1]};
  }
  std::size_t degree(VertexId x) const { return vertex_begin_[x + 1] - vertex_begin_[x]; }

  /// Total incidence size |Hv| + |Hx| + sum |v(e)|, the unit of the
  /// linear-time contract of the correspondence operators.
  std::size_t incidence_size() const { return vertex_count() + edge_count() + pins_.size(); }

  std::size_t empty_edge_count() const { return empty_edges_; }

  const std::string& vertex_label(VertexId x) const { return vertex_label_[x]; }
  const std::string& edge_id(EdgeId i) const { return edge_id_[i]; }

  /// Lookup by label; returns vertex_count() when absent.
  std::size_t find_vertex(const std::string& label) const {
    auto it = vertex_index_.find(label);
    return it == vertex_index_.end() ? vertex_count() : it->second;
  }
  std::size_t find_edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    return it == edge_index_.end() ? edge_count() : it->second;
  }

  bool operator==(const Hypergraph& o) const {
    return vertex_label_ == o.vertex_label_ && edge_id_ == o.edge_id_ &&
           edge_begin_ == o.edge_begin_ && pins_ == o.pins_;
  }

 private:
  Hypergraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges,
             std::vector<std::string> vertex_labels, std::vector<std::string> edge_ids) {
    if (vertex_labels.empty()) {
      vertex_labels.resize(vertex_count);
      for (std::size_t i = 0; i < vertex_count; ++i) vertex_labels[i] = std::to_string(i);
    }
    if (edge_ids.empty()) {
      edge_ids.resize(edges.size());
      for (std::size_t i = 0; i < edges.size(); ++i) edge_ids[i] = "e" + std::to_string(i);
    }
    if (vertex_labels.size() != vertex_count || edge_ids.size() != edges.size())
      throw std::invalid_argument("label table size mismatch");

    vertex_label_ = std::move(vertex_labels);
    edge_id_ = std::move(edge_ids);
    for (std::size_t i = 0; i < vertex_label_.size(); ++i)
      if (!vertex_index_.emplace(vertex_label_[i], static_cast<VertexId>(i)).second)
        throw std::invalid_argument("duplicate vertex label: " + vertex_label_[i]);
    for (std::size_t i = 0; i < edge_id_.size(); ++i)
      if (!edge_index_.emplace(edge_id_[i], static_cast<EdgeId>(i)).second)
        throw std::invalid_argument("duplicate edge id: " + edge_id_[i]);

    edge_begin_.reserve(edges.size() + 1);
    edge_begin_.push_back(0);
    for (auto& members : edges) {
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      for (VertexId v : members) {
        if (v >= vertex_count) throw std::invalid_argument("edge vertex index out of range");
        pins_.push_back(v);
      }
      if (members.empty()) ++empty_edges_;
      edge_begin_.push_back(static_cast<uint32_t>(pins_.size()));
    }

    // Transpose into per-vertex incidence (counting sort keeps both sides
    // sorted, so incidence(x) is ascending in edge index).
    vertex_begin_.assign(vertex_count + 1, 0);
    for (VertexId v : pins_) ++vertex_begin_[v + 1];
    std::partial_sum(vertex_begin_.begin(), vertex_begin_.end(), vertex_begin_.begin());
    incident_.resize(pins_.size());
    std::vector<uint32_t> cursor(vertex_begin_.begin(), vertex_begin_.end() - 1);
    for (std::size_t i = 0; i + 1 < edge_begin_.size(); ++i)
      for (uint32_t p = edge_begin_[i]; p < edge_begin_[i + 1]; ++p)
        incident_[cursor[pins_[p]]++] = static_cast<EdgeId>(i);
  }

  std::vector<std::string> vertex_label_;
  std::vector<std::string> edge_id_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<uint32_t> edge_begin_;    // CSR offsets into pins_
  std::vector<VertexId> pins_;          // edge -> member vertices, sorted
  std::vector<uint32_t> vertex_begin_;  // CSR offsets into incident_
  std::vector<EdgeId> incident_;        // vertex -> incident edges, sorted
  std::size_t empty_edges_ = 0;
};

namespace detail {
struct VertexTag {
  static std::size_t universe(const Hypergraph& h) { return h.vertex_count(); }
  static const std::string& name(const Hypergraph& h, std::size_t i) {
    return h.vertex_label(static_cast<VertexId>(i));
  }
};
struct EdgeTag {
  static std::size_t universe(const Hypergraph& h) { return h.edge_count(); }
  static const std::string& name(const Hypergraph& h, std::size_t i) {
    return h.edge_id(static_cast<EdgeId>(i));
  }
};
}  // namespace detail

/// Subset of one side of a fixed hypergraph, bound to it for its lifetime.
/// Complement is always taken relative to the bound universe.
template <class Tag>
class IndexSet {
 public:
  IndexSet(const Hypergraph& h, Bitset bits) : graph_(&h), bits_(std::move(bits)) {
    assert(bits_.size() == Tag::universe(h));
  }

  static IndexSet empty(const Hypergraph& h) { return IndexSet(h, Bitset(Tag::universe(h))); }
  static IndexSet full(const Hypergraph& h) {
    return IndexSet(h, Bitset::full(Tag::universe(h)));
  }
  static IndexSet of(const Hypergraph& h, std::initializer_list<std::size_t> members) {
    IndexSet s = empty(h);
    for (std::size_t i : members) s.add(i);
    return s;
  }
  /// Low 64 universe elements from a mask; enumeration helpers use this.
  static IndexSet from_mask(const Hypergraph& h, uint64_t mask) {
    IndexSet s = empty(h);
    for (std::size_t i = 0; i < Tag::universe(h) && i < 64; ++i)
      if ((mask >> i) & 1) s.add(i);
    return s;
  }

  const Hypergraph& graph() const { return *graph_; }
  bool same_graph(const IndexSet& o) const { return graph_ == o.graph_; }

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty_set() const { return bits_.none(); }

  bool contains(std::size_t i) const { return i < bits_.size() && bits_.test(i); }
  void add(std::size_t i) {
    if (i >= bits_.size()) throw std::invalid_argument("index outside bound universe");
    bits_.set(i);
  }
  void remove(std::size_t i) {
    if (i >= bits_.size()) throw std::invalid_argument("index outside bound universe");
    bits_.reset(i);
  }

  IndexSet complement() const { return IndexSet(*graph_, bits_.complement()); }

  bool is_subset_of(const IndexSet& o) const {
    assert(same_graph(o));
    return bits_.is_subset_of(o.bits_);
  }
  bool intersects(const IndexSet& o) const {
    assert(same_graph(o));
    return bits_.intersects(o.bits_);
  }

  IndexSet& operator|=(const IndexSet& o) {
    assert(same_graph(o));
    bits_ |= o.bits_;
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    assert(same_graph(o));
    bits_ &= o.bits_;
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    assert(same_graph(o));
    bits_ -= o.bits_;
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

  bool operator==(const IndexSet& o) const { return graph_ == o.graph_ && bits_ == o.bits_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    bits_.for_each(fn);
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    bits_.for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// "{a,b,c}" with element names in index order.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    bits_.for_each([&](std::size_t i) {
      if (!first) out += ',';
      out += Tag::name(*graph_, i);
      first = false;
    });
    out += '}';
    return out;
  }

  const Bitset& bits() const { return bits_; }
  Bitset& bits() { return bits_; }

 private:
  const Hypergraph* graph_;
  Bitset bits_;
};

using VertexSet = IndexSet<detail::VertexTag>;  // subsets of Hv
using EdgeSet = IndexSet<detail::EdgeTag>;      // subsets of Hx, by index

/// True iff v(e) is contained in vset for every member edge. Both parts
/// must be bound to the same hypergraph.
inline bool is_subhypergraph(const VertexSet& vset, const EdgeSet& eset) {
  if (&vset.graph() != &eset.graph())
    throw std::invalid_argument("vertex and edge parts bound to different hypergraphs");
  const Hypergraph& h = vset.graph();
  bool ok = true;
  eset.for_each([&](std::size_t i) {
    auto [b, e] = h.edge_vertices(static_cast<EdgeId>(i));
    for (const VertexId* p = b; p != e; ++p)
      if (!vset.contains(*p)) ok = false;
  });
  return ok;
}

/// A pair (vertex part, edge part) satisfying the cover condition. The
/// checked constructor rejects invalid pairs; operators that are proved to
/// preserve the condition construct through unchecked() and assert instead.
class SubHypergraph {
 public:
  SubHypergraph(VertexSet vset, EdgeSet eset)
      : vset_(std::move(vset)), eset_(std::move(eset)) {
    if (!is_subhypergraph(vset_, eset_))
      throw std::invalid_argument("cover condition violated: edge not contained in vertex part");
  }

  static SubHypergraph unchecked(VertexSet vset, EdgeSet eset) {
    assert(is_subhypergraph(vset, eset));
    return SubHypergraph(std::move(vset), std::move(eset), 0);
  }

  static SubHypergraph empty(const Hypergraph& h) {
    return unchecked(VertexSet::empty(h), EdgeSet::empty(h));
  }
  static SubHypergraph full(const Hypergraph& h) {
    return unchecked(VertexSet::full(h), EdgeSet::full(h));
  }

  const VertexSet& vertices() const { return vset_; }
  const EdgeSet& edges() const { return eset_; }
  const Hypergraph& graph() const { return vset_.graph(); }

  bool is_subset_of(const SubHypergraph& o) const {
    return vset_.is_subset_of(o.vset_) && eset_.is_subset_of(o.eset_);
  }

  bool operator==(const SubHypergraph& o) const {
    return vset_ == o.vset_ && eset_ == o.eset_;
  }

 private:
  SubHypergraph(VertexSet vset, EdgeSet eset, int)
      : vset_(std::move(vset)), eset_(std::move(eset)) {}

  VertexSet vset_;
  EdgeSet eset_;
};

/// H(Xv): the largest subhypergraph with vertex part Xv, i.e.
/// (Xv, { e_i | v(e_i) contained in Xv }).
inline SubHypergraph induced_by_vertices(const VertexSet& vset) {
  const Hypergraph& h = vset.graph();
  EdgeSet eset = EdgeSet::empty(h);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto [b, e] = h.edge_vertices(static_cast<EdgeId>(i));
    bool inside = true;
    for (const VertexId* p = b; p != e && inside; ++p) inside = vset.contains(*p);
    if (inside) eset.add(i);
  }
  return SubHypergraph::unchecked(vset, std::move(eset));
}

/// H(Xx): the smallest subhypergraph with edge part Xx, i.e.
/// (union of member v(e), Xx).
inline SubHypergraph induced_by_edges(const EdgeSet& eset) {
  const Hypergraph& h = eset.graph();
  VertexSet vset = VertexSet::empty(h);
  eset.for_each([&](std::size_t i) {
    auto [b, e] = h.edge_vertices(static_cast<EdgeId>(i));
    for (const VertexId* p = b; p != e; ++p) vset.bits().set(*p);
  });
  return SubHypergraph::unchecked(std::move(vset), eset);
}

inline VertexSet complement_vertices(const VertexSet& s) { return s.complement(); }
inline EdgeSet complement_edges(const EdgeSet& s) { return s.complement(); }

}  // namespace hgmorph

#endif  // HGMORPH_HYPERGRAPH_HPP
