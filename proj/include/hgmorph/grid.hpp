#ifndef HGMORPH_GRID_HPP
#define HGMORPH_GRID_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hgmorph/hypergraph.hpp"

namespace hgmorph {

/// W x H lattice of vertices in row-major order (labels are the decimal
/// indices). The cross4 model adds one hyperedge per interior cell,
/// consisting of the cell's four axis neighbors; the center vertex itself
/// is not a member. Edges are emitted in row-major interior order.
inline Hypergraph gen_grid(std::size_t width, std::size_t height,
                           std::string_view edge_model = "cross4") {
  if (width == 0 || height == 0)
    throw std::invalid_argument("grid sides must be at least 1");
  if (edge_model != "cross4")
    throw std::invalid_argument("unsupported edge model '" + std::string(edge_model) + "'");
  std::vector<std::vector<VertexId>> edges;
  if (width >= 3 && height >= 3) {
    edges.reserve((width - 2) * (height - 2));
    for (std::size_t y = 1; y + 1 < height; ++y) {
      for (std::size_t x = 1; x + 1 < width; ++x) {
        const std::size_t c = y * width + x;
        edges.push_back({static_cast<VertexId>(c - width), static_cast<VertexId>(c - 1),
                         static_cast<VertexId>(c + 1), static_cast<VertexId>(c + width)});
      }
    }
  }
  return Hypergraph::from_indices(width * height, std::move(edges));
}

}  // namespace hgmorph

#endif  // HGMORPH_GRID_HPP
