#ifndef HGMORPH_DOT_HPP
#define HGMORPH_DOT_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "hgmorph/hypergraph.hpp"

namespace hgmorph {

namespace dot_detail {

inline std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace dot_detail

/// Bipartite incidence rendering: one circle node per vertex, one box node
/// per hyperedge, one undirected arc per membership, arcs grouped by edge.
/// Node names carry "v:"/"e:" prefixes so vertex labels cannot collide
/// with edge ids. Highlighted elements get a fill color.
inline std::string export_dot(const Hypergraph& h,
                              const std::optional<SubHypergraph>& highlight = std::nullopt) {
  if (highlight && &highlight->graph() != &h)
    throw std::invalid_argument("highlight not bound to the exported hypergraph");
  std::string out = "graph hgmorph {\n";
  for (std::size_t x = 0; x < h.vertex_count(); ++x) {
    out += "  " + dot_detail::quoted("v:" + h.vertex_label(static_cast<VertexId>(x))) +
           " [shape=circle, label=" +
           dot_detail::quoted(h.vertex_label(static_cast<VertexId>(x)));
    if (highlight && highlight->vertices().contains(x))
      out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    out += "  " + dot_detail::quoted("e:" + h.edge_id(static_cast<EdgeId>(i))) +
           " [shape=box, label=" + dot_detail::quoted(h.edge_id(static_cast<EdgeId>(i)));
    if (highlight && highlight->edges().contains(i))
      out += ", style=filled, fillcolor=lightsalmon";
    out += "];\n";
  }
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto [b, e] = h.edge_vertices(static_cast<EdgeId>(i));
    for (const VertexId* p = b; p != e; ++p)
      out += "  " + dot_detail::quoted("v:" + h.vertex_label(*p)) + " -- " +
             dot_detail::quoted("e:" + h.edge_id(static_cast<EdgeId>(i))) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hgmorph

#endif  // HGMORPH_DOT_HPP
