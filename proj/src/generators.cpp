#include "octanet/generators.hpp"

namespace octanet {

std::string matching_name(PrismMatching m) { return m == PrismMatching::Forward ? "forward" : "reverse"; }

VertexKey centroid_key(const CellId& cell, int face) {
  return {VertexKey::Tag::Centroid, {cell.site.a, cell.site.b, cell.site.c, cell.side, face, 0}};
}

Network ornament(std::span<const SilicateCell> cells, Family family, int n, CellStyle style,
                 PrismMatching matching) {
  Network::Builder builder(family, n);
  for (const auto& cell : cells) {
    std::array<VertexKey, 3> corner;
    std::array<VertexKey, 3> centre;
    for (int i = 0; i < 3; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const auto w = static_cast<std::size_t>((i + 1) % 3);
      corner[u] = cell.corners[u].vertex_key();
      centre[u] = centroid_key(cell.id, i);
      builder.add_vertex(corner[u], Role::OxideCorner, cell.corner_positions[u]);
      // Face i is the triangle (silicon, corner i, corner i+1).
      const Point& a = cell.corner_positions[u];
      const Point& b = cell.corner_positions[w];
      builder.add_vertex(centre[u], Role::Centroid,
                         {(cell.center.x + a.x + b.x) / 3, (cell.center.y + a.y + b.y) / 3});
    }
    for (int i = 0; i < 3; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const auto w = static_cast<std::size_t>((i + 1) % 3);
      builder.add_edge(corner[u], corner[w]);
      builder.add_edge(centre[u], centre[w]);
      if (style == CellStyle::Octahedron) {
        builder.add_edge(centre[u], corner[u]);
        builder.add_edge(centre[u], corner[w]);
      } else {
        builder.add_edge(centre[u], corner[matching == PrismMatching::Forward ? u : w]);
      }
    }
  }
  return builder.build();
}

Network generate_poh(int n) {
  const auto cells = silicate_cells(n);
  return ornament(cells, Family::POH, n, CellStyle::Octahedron);
}

Network generate_tp(int n, PrismMatching matching) {
  const auto cells = silicate_cells(n);
  return ornament(cells, Family::TP, n, CellStyle::Prism, matching);
}

Network generate_dpoh(int n) {
  const auto cells = dominating_cells(n);
  return ornament(cells, Family::DPOH, n, CellStyle::Octahedron);
}

Network generate(Family family, int n) {
  switch (family) {
    case Family::POH: return generate_poh(n);
    case Family::TP: return generate_tp(n);
    case Family::DPOH: return generate_dpoh(n);
    case Family::Custom: break;
  }
  throw std::invalid_argument("custom graphs cannot be generated");
}

}  // namespace octanet
