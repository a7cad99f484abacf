#pragma once

// Honeycomb HC(n) combinatorics and the triangle-cell layouts that the
// network generators ornament.

#include "octanet/graph.hpp"

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

namespace octanet {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Integer triple in cube coordinates. Hexagon centres satisfy a+b+c = 0;
/// vertex and edge keys are sums of 3 and 2 hexagon centres respectively.
struct Triple {
  int a = 0;
  int b = 0;
  int c = 0;

  auto operator<=>(const Triple&) const = default;
  Triple operator+(const Triple& o) const { return {a + o.a, b + o.b, c + o.c}; }
  Triple operator*(int k) const { return {a * k, b * k, c * k}; }
};

using HexCoord = Triple;

/// The six unit steps between neighbouring hexagons, counterclockwise.
extern const std::array<HexCoord, 6> kHexDirections;

struct HcVertexKey {
  Triple sum;  // sum of the three hexagon centres meeting at the vertex
  auto operator<=>(const HcVertexKey&) const = default;
};

struct HcEdgeKey {
  Triple sum;  // sum of the two hexagon centres sharing the edge
  auto operator<=>(const HcEdgeKey&) const = default;
};

struct HcVertex {
  HcVertexKey key;
  std::array<HexCoord, 3> hexes;  // sorted; some may lie outside HC(n)
};

struct HcEdge {
  HcEdgeKey key;
  std::array<HcVertexKey, 2> ends;
  std::array<HexCoord, 2> hexes;
};

struct Honeycomb {
  int n = 0;
  std::vector<HexCoord> hexagons;  // sorted
  std::vector<HcVertex> vertices;  // sorted by key
  std::vector<HcEdge> edges;       // sorted by key
  std::map<HcVertexKey, std::vector<HcEdgeKey>> vertex_edges;
  std::map<HexCoord, std::array<HcVertexKey, 6>> hexagon_vertices;  // corner j between steps j and j+1

  bool contains(const HexCoord& h) const;
};

/// Throws DimensionError for n < 1.
Honeycomb honeycomb(int n);

struct CornerKey {
  enum class Kind { Shared, Pendant, Inner, Outer };

  Kind kind = Kind::Shared;
  Triple primary;    // edge key (Shared, Outer), vertex key (Pendant), hexagon (Inner)
  Triple secondary;  // vertex key for Inner
  int slot = 0;      // Pendant only

  auto operator<=>(const CornerKey&) const = default;
  VertexKey vertex_key() const;
};

struct CellId {
  Triple site;   // host honeycomb vertex key, or hexagon for dominating cells
  int side = 0;  // hexagon side for dominating cells, 0 otherwise
  auto operator<=>(const CellId&) const = default;
};

/// One corner-sharing triangle. Corners are listed counterclockwise, starting
/// from the smallest key.
struct SilicateCell {
  CellId id;
  std::array<CornerKey, 3> corners;
  std::array<Point, 3> corner_positions;
  Point center;
};

/// One triangle per honeycomb vertex; corners on honeycomb edges, plus a
/// pendant corner at each degree-2 boundary vertex.
std::vector<SilicateCell> silicate_cells(int n);

/// A closed ring of six cells inside each hexagon, one per hexagon side. Two
/// inner corners per cell are shared around the ring; the outer corner sits on
/// the side and is shared with the neighbouring hexagon's ring.
std::vector<SilicateCell> dominating_cells(int n);

}  // namespace octanet
