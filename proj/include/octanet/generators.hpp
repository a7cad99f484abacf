#pragma once

#include "octanet/graph.hpp"
#include "octanet/scaffold.hpp"

#include <span>
#include <string>

namespace octanet {

/// Which corner a prism centroid is joined to: face i spans corners i and
/// i+1, Forward picks corner i and Reverse picks corner i+1.
enum class PrismMatching { Forward, Reverse };

std::string matching_name(PrismMatching m);

/// Key of the centroid of face `face` (0..2) of a cell.
VertexKey centroid_key(const CellId& cell, int face);

enum class CellStyle { Octahedron, Prism };

/// Replaces every cell by its octahedron or prism ornament: corner triangle,
/// centroid triangle, and centroid-to-corner spokes.
Network ornament(std::span<const SilicateCell> cells, Family family, int n, CellStyle style,
                 PrismMatching matching = PrismMatching::Forward);

Network generate_poh(int n);
Network generate_tp(int n, PrismMatching matching = PrismMatching::Forward);
Network generate_dpoh(int n);

/// Dispatch on family; Custom is rejected.
Network generate(Family family, int n);

}  // namespace octanet
