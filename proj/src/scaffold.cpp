#include "octanet/scaffold.hpp"

#include <algorithm>
#include <cstdlib>

namespace octanet {

const std::array<HexCoord, 6> kHexDirections = {{
    {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {-1, 1, 0}, {-1, 0, 1}, {0, -1, 1},
}};

namespace {

void check_dimension(int n) {
  if (n < 1) throw DimensionError("dimension n must be >= 1 (got " + std::to_string(n) + ")");
}

// Flat-top hexagons of circumradius 1: x = 3q/2, y = (r + q/2) in units of sqrt(3).
Point lattice_point(const Rational& q, const Rational& r) {
  return {Rational(3, 2) * q, r + q / 2};
}

Point point_of(const Triple& t, int divisor) {
  return lattice_point(Rational(t.a, divisor), Rational(t.c, divisor));
}

Point lerp(const Point& from, const Point& to, const Rational& t) {
  return {from.x + (to.x - from.x) * t, from.y + (to.y - from.y) * t};
}

Point centroid(const Point& a, const Point& b, const Point& c) {
  return {(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
}

Rational orientation(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

SilicateCell make_cell(CellId id, std::array<std::pair<CornerKey, Point>, 3> corners) {
  std::sort(corners.begin(), corners.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  if (orientation(corners[0].second, corners[1].second, corners[2].second) < 0) std::swap(corners[1], corners[2]);
  SilicateCell cell;
  cell.id = id;
  for (std::size_t i = 0; i < 3; ++i) {
    cell.corners[i] = corners[i].first;
    cell.corner_positions[i] = corners[i].second;
  }
  cell.center = centroid(corners[0].second, corners[1].second, corners[2].second);
  return cell;
}

}  // namespace

bool Honeycomb::contains(const HexCoord& h) const {
  return std::max({std::abs(h.a), std::abs(h.b), std::abs(h.c)}) <= n - 1;
}

Honeycomb honeycomb(int n) {
  check_dimension(n);
  Honeycomb hc;
  hc.n = n;
  for (int x = -(n - 1); x <= n - 1; ++x) {
    for (int y = -(n - 1); y <= n - 1; ++y) {
      HexCoord h{x, y, -x - y};
      if (hc.contains(h)) hc.hexagons.push_back(h);
    }
  }
  std::sort(hc.hexagons.begin(), hc.hexagons.end());

  std::map<HcVertexKey, HcVertex> vertices;
  std::map<HcEdgeKey, HcEdge> edges;
  for (const auto& c : hc.hexagons) {
    std::array<HcVertexKey, 6> corners;
    for (std::size_t j = 0; j < 6; ++j) {
      const HexCoord& d0 = kHexDirections[j];
      const HexCoord& d1 = kHexDirections[(j + 1) % 6];
      HcVertex v{{c * 3 + d0 + d1}, {c, c + d0, c + d1}};
      std::sort(v.hexes.begin(), v.hexes.end());
      corners[j] = v.key;
      vertices.emplace(v.key, v);
    }
    hc.hexagon_vertices.emplace(c, corners);
    for (std::size_t j = 0; j < 6; ++j) {
      // Side j is shared with hexagon c + d_j and joins corners j-1 and j.
      const HexCoord& d = kHexDirections[j];
      HcEdge e{{c * 2 + d}, {corners[(j + 5) % 6], corners[j]}, {c, c + d}};
      std::sort(e.ends.begin(), e.ends.end());
      std::sort(e.hexes.begin(), e.hexes.end());
      edges.emplace(e.key, e);
    }
  }
  for (auto& [key, v] : vertices) hc.vertices.push_back(v);
  for (auto& [key, e] : edges) {
    hc.edges.push_back(e);
    for (const auto& end : e.ends) hc.vertex_edges[end].push_back(key);
  }
  return hc;
}

VertexKey CornerKey::vertex_key() const {
  switch (kind) {
    case Kind::Shared:
      return {VertexKey::Tag::SharedCorner, {primary.a, primary.b, primary.c, 0, 0, 0}};
    case Kind::Pendant:
      return {VertexKey::Tag::PendantCorner, {primary.a, primary.b, primary.c, slot, 0, 0}};
    case Kind::Inner:
      return {VertexKey::Tag::InnerCorner, {primary.a, primary.b, primary.c, secondary.a, secondary.b, secondary.c}};
    case Kind::Outer:
      return {VertexKey::Tag::OuterCorner, {primary.a, primary.b, primary.c, 0, 0, 0}};
  }
  return {};
}

std::vector<SilicateCell> silicate_cells(int n) {
  const Honeycomb hc = honeycomb(n);
  std::vector<SilicateCell> cells;
  cells.reserve(hc.vertices.size());
  for (const auto& v : hc.vertices) {
    std::array<std::pair<CornerKey, Point>, 3> corners;
    std::size_t next = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const HexCoord& h0 = v.hexes[i];
        const HexCoord& h1 = v.hexes[j];
        const Triple pair_sum = h0 + h1;
        // The pendant sits where the missing boundary edge would be.
        CornerKey key = (hc.contains(h0) || hc.contains(h1))
                            ? CornerKey{CornerKey::Kind::Shared, pair_sum, {}, 0}
                            : CornerKey{CornerKey::Kind::Pendant, v.key.sum, {}, 0};
        corners[next++] = {key, point_of(pair_sum, 2)};
      }
    }
    SilicateCell cell = make_cell({v.key.sum, 0}, corners);
    cell.center = point_of(v.key.sum, 3);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<SilicateCell> dominating_cells(int n) {
  const Honeycomb hc = honeycomb(n);
  const Rational inner_scale(7, 10);
  std::vector<SilicateCell> cells;
  cells.reserve(hc.hexagons.size() * 6);
  for (const auto& c : hc.hexagons) {
    const auto& ring = hc.hexagon_vertices.at(c);
    const Point center = point_of(c, 1);
    for (int side = 0; side < 6; ++side) {
      const HcVertexKey& v0 = ring[static_cast<std::size_t>((side + 5) % 6)];
      const HcVertexKey& v1 = ring[static_cast<std::size_t>(side)];
      const Triple edge = c * 2 + kHexDirections[static_cast<std::size_t>(side)];
      std::array<std::pair<CornerKey, Point>, 3> corners = {{
          {CornerKey{CornerKey::Kind::Inner, c, v0.sum, 0}, lerp(center, point_of(v0.sum, 3), inner_scale)},
          {CornerKey{CornerKey::Kind::Inner, c, v1.sum, 0}, lerp(center, point_of(v1.sum, 3), inner_scale)},
          {CornerKey{CornerKey::Kind::Outer, edge, {}, 0}, point_of(edge, 2)},
      }};
      cells.push_back(make_cell({c, side}, corners));
    }
  }
  return cells;
}

}  // namespace octanet
