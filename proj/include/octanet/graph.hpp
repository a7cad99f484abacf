#pragma once

#include "octanet/radical.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octanet {

enum class Family { POH, TP, DPOH, Custom };

std::string family_name(Family f);        // "POH", "TP", "DPOH", "Custom"
std::string family_cli_name(Family f);    // "poh", "tp", "dpoh", "custom"
Family parse_family(const std::string& text);  // accepts either spelling

enum class Role { OxideCorner, Centroid, Plain };

std::string role_name(Role r);
Role parse_role(const std::string& text);

enum class Basis { Degree, DegreeSum };

std::string basis_name(Basis b);  // "degree", "degsum"
Basis parse_basis(const std::string& text);

/// Structural identity of a vertex. Corner and centroid keys are built from
/// honeycomb lattice data, never from coordinates.
struct VertexKey {
  enum class Tag : std::uint8_t { SharedCorner, PendantCorner, InnerCorner, OuterCorner, Centroid, Plain };

  Tag tag = Tag::Plain;
  std::array<std::int32_t, 6> parts{};

  static VertexKey plain(std::int32_t index) { return {Tag::Plain, {index, 0, 0, 0, 0, 0}}; }

  auto operator<=>(const VertexKey&) const = default;
  std::string str() const;
};

/// Planar position with rational coordinates. `y` is measured in units of
/// sqrt(3), so the Cartesian point is (x, sqrt(3)*y).
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

struct VertexRecord {
  VertexKey key;
  Role role = Role::Plain;
  Point position;
};

enum class GraphErrc { UnknownVertex, DisconnectedGraph, SelfLoop, ParallelEdge, RoleConflict, BadInput };

class GraphError : public std::runtime_error {
public:
  GraphError(GraphErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  GraphErrc code() const noexcept { return code_; }

private:
  GraphErrc code_;
};

using VertexId = std::size_t;

/// Immutable undirected simple graph. Vertices are ordered by key, so ids and
/// every iteration order are deterministic.
class Network {
public:
  class Builder;

  Family family() const noexcept { return family_; }
  std::optional<int> dimension() const noexcept { return dimension_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<VertexRecord>& vertices() const noexcept { return vertices_; }
  const VertexRecord& vertex(VertexId id) const { return vertices_.at(id); }
  std::span<const VertexId> neighbors(VertexId id) const { return adjacency_.at(id); }

  std::optional<VertexId> find(const VertexKey& key) const;
  /// Throws GraphError(UnknownVertex).
  VertexId id_of(const VertexKey& key) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
  Family family_ = Family::Custom;
  std::optional<int> dimension_;
  std::vector<VertexRecord> vertices_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

class Network::Builder {
public:
  Builder(Family family, std::optional<int> dimension) : family_(family), dimension_(dimension) {}

  /// Adding an existing key again is a no-op if the role agrees.
  Builder& add_vertex(const VertexKey& key, Role role, Point position = {});
  /// Both endpoints must already exist. Self-loops and repeated edges throw.
  Builder& add_edge(const VertexKey& a, const VertexKey& b);

  Network build() const;

private:
  Family family_;
  std::optional<int> dimension_;
  std::map<VertexKey, VertexRecord> vertices_;
  std::set<std::pair<VertexKey, VertexKey>> edges_;
};

int degree(const Network& g, VertexId v);
int degree(const Network& g, const VertexKey& v);
/// S_v: sum of the degrees of v's neighbours.
long degree_sum(const Network& g, VertexId v);
long degree_sum(const Network& g, const VertexKey& v);

/// Unordered class (a, b) with a <= b.
using EdgeClass = std::pair<long, long>;

struct EdgePartition {
  Basis kind = Basis::Degree;
  std::map<EdgeClass, long> classes;

  long total() const;
  long count(EdgeClass c) const;
  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

EdgePartition edge_partition(const Network& g, Basis kind);

bool is_connected(const Network& g);

/// Row-major all-pairs geodesic distances. Throws DisconnectedGraph.
class DistanceMatrix {
public:
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  std::size_t size() const noexcept { return n_; }
  int at(VertexId u, VertexId v) const { return data_[u * n_ + v]; }
  int& at(VertexId u, VertexId v) { return data_[u * n_ + v]; }

private:
  std::size_t n_;
  std::vector<int> data_;
};

DistanceMatrix distance_matrix(const Network& g);

// Small reference graphs used by tests and the CLI.
Network complete_graph(int n);
Network path_graph(int n);
Network cycle_graph(int n);

}  // namespace octanet
