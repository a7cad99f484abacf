#pragma once

#include "octanet/graph.hpp"

#include <string>

namespace octanet {

/// {"family", "n", "vertices":[{"id","key","role","x","y"}], "edges":[[u,v],...]}
/// Coordinates are `p/q` strings; `n` is null for custom graphs.
std::string to_json(const Network& g);

/// Reads the schema written by to_json. Keys of imported vertices are taken
/// from their ids, so any valid file round-trips to an isomorphic graph.
Network network_from_json(const std::string& text);

/// Graphviz export; centroids are drawn as small boxes, corners as circles.
std::string to_dot(const Network& g);

/// One `u v` line per edge, ids as in the JSON export.
std::string to_edgelist(const Network& g);

}  // namespace octanet
