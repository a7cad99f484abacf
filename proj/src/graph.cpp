#include "octanet/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace octanet {

std::string family_name(Family f) {
  switch (f) {
    case Family::POH: return "POH";
    case Family::TP: return "TP";
    case Family::DPOH: return "DPOH";
    case Family::Custom: return "Custom";
  }
  return "Custom";
}

std::string family_cli_name(Family f) {
  std::string s = family_name(f);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::POH, Family::TP, Family::DPOH, Family::Custom}) {
    if (text == family_name(f) || text == family_cli_name(f)) return f;
  }
  throw std::invalid_argument("unknown family '" + text + "'");
}

std::string role_name(Role r) {
  switch (r) {
    case Role::OxideCorner: return "oxide";
    case Role::Centroid: return "centroid";
    case Role::Plain: return "plain";
  }
  return "plain";
}

Role parse_role(const std::string& text) {
  for (Role r : {Role::OxideCorner, Role::Centroid, Role::Plain}) {
    if (text == role_name(r)) return r;
  }
  throw std::invalid_argument("unknown role '" + text + "'");
}

std::string basis_name(Basis b) { return b == Basis::Degree ? "degree" : "degsum"; }

Basis parse_basis(const std::string& text) {
  if (text == "degree") return Basis::Degree;
  if (text == "degsum") return Basis::DegreeSum;
  throw std::invalid_argument("unknown basis '" + text + "' (expected degree or degsum)");
}

std::string VertexKey::str() const {
  auto join = [this](std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) {
      if (i > from) s += ",";
      s += std::to_string(parts[i]);
    }
    return s;
  };
  switch (tag) {
    case Tag::SharedCorner: return "S(" + join(0, 3) + ")";
    case Tag::PendantCorner: return "P(" + join(0, 3) + ";" + std::to_string(parts[3]) + ")";
    case Tag::InnerCorner: return "I(" + join(0, 3) + ";" + join(3, 6) + ")";
    case Tag::OuterCorner: return "O(" + join(0, 3) + ")";
    case Tag::Centroid:
      return "C(" + join(0, 3) + ";" + std::to_string(parts[3]) + ";" + std::to_string(parts[4]) + ")";
    case Tag::Plain: return "v" + std::to_string(parts[0]);
  }
  return "?";
}

std::optional<VertexId> Network::find(const VertexKey& key) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), key,
                             [](const VertexRecord& r, const VertexKey& k) { return r.key < k; });
  if (it == vertices_.end() || it->key != key) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

VertexId Network::id_of(const VertexKey& key) const {
  if (auto id = find(key)) return *id;
  throw GraphError(GraphErrc::UnknownVertex, "unknown vertex " + key.str());
}

std::vector<std::pair<VertexId, VertexId>> Network::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Network::Builder& Network::Builder::add_vertex(const VertexKey& key, Role role, Point position) {
  auto [it, inserted] = vertices_.try_emplace(key, VertexRecord{key, role, std::move(position)});
  if (!inserted && it->second.role != role) {
    throw GraphError(GraphErrc::RoleConflict, "vertex " + key.str() + " added with two roles");
  }
  return *this;
}

Network::Builder& Network::Builder::add_edge(const VertexKey& a, const VertexKey& b) {
  if (a == b) throw GraphError(GraphErrc::SelfLoop, "self-loop at " + a.str());
  for (const auto& k : {a, b}) {
    if (!vertices_.count(k)) throw GraphError(GraphErrc::UnknownVertex, "edge endpoint " + k.str() + " not added");
  }
  auto edge = std::minmax(a, b);
  if (!edges_.emplace(edge.first, edge.second).second) {
    throw GraphError(GraphErrc::ParallelEdge, "repeated edge " + a.str() + " -- " + b.str());
  }
  return *this;
}

Network Network::Builder::build() const {
  Network g;
  g.family_ = family_;
  g.dimension_ = dimension_;
  g.vertices_.reserve(vertices_.size());
  for (const auto& [key, record] : vertices_) g.vertices_.push_back(record);
  g.adjacency_.resize(g.vertices_.size());
  for (const auto& [a, b] : edges_) {
    VertexId u = g.id_of(a);
    VertexId v = g.id_of(b);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edge_count_ = edges_.size();
  return g;
}

int degree(const Network& g, VertexId v) { return static_cast<int>(g.neighbors(v).size()); }

int degree(const Network& g, const VertexKey& v) { return degree(g, g.id_of(v)); }

long degree_sum(const Network& g, VertexId v) {
  long sum = 0;
  for (VertexId w : g.neighbors(v)) sum += degree(g, w);
  return sum;
}

long degree_sum(const Network& g, const VertexKey& v) { return degree_sum(g, g.id_of(v)); }

long EdgePartition::total() const {
  long sum = 0;
  for (const auto& [cls, count] : classes) sum += count;
  return sum;
}

long EdgePartition::count(EdgeClass c) const {
  if (c.first > c.second) std::swap(c.first, c.second);
  auto it = classes.find(c);
  return it == classes.end() ? 0 : it->second;
}

EdgePartition edge_partition(const Network& g, Basis kind) {
  std::vector<long> label(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    label[v] = kind == Basis::Degree ? degree(g, v) : degree_sum(g, v);
  }
  EdgePartition out;
  out.kind = kind;
  for (const auto& [u, v] : g.edges()) {
    auto cls = std::minmax(label[u], label[v]);
    ++out.classes[{cls.first, cls.second}];
  }
  return out;
}

namespace {

// Fills `dist` with BFS distances from `source`; returns the number reached.
std::size_t bfs(const Network& g, VertexId source, std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached;
}

}  // namespace

bool is_connected(const Network& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<int> dist(g.vertex_count());
  return bfs(g, 0, dist) == g.vertex_count();
}

DistanceMatrix distance_matrix(const Network& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix out(n);
  std::vector<int> dist(n);
  for (VertexId s = 0; s < n; ++s) {
    if (bfs(g, s, dist) != n) throw GraphError(GraphErrc::DisconnectedGraph, "graph is not connected");
    for (VertexId t = 0; t < n; ++t) out.at(s, t) = dist[t];
  }
  return out;
}

Network complete_graph(int n) {
  Network::Builder b(Family::Custom, std::nullopt);
  for (int i = 0; i < n; ++i) b.add_vertex(VertexKey::plain(i), Role::Plain);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(VertexKey::plain(i), VertexKey::plain(j));
  return b.build();
}

Network path_graph(int n) {
  Network::Builder b(Family::Custom, std::nullopt);
  for (int i = 0; i < n; ++i) b.add_vertex(VertexKey::plain(i), Role::Plain);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(VertexKey::plain(i), VertexKey::plain(i + 1));
  return b.build();
}

Network cycle_graph(int n) {
  Network::Builder b(Family::Custom, std::nullopt);
  for (int i = 0; i < n; ++i) b.add_vertex(VertexKey::plain(i), Role::Plain);
  for (int i = 0; i < n; ++i) b.add_edge(VertexKey::plain(i), VertexKey::plain((i + 1) % n));
  return b.build();
}

}  // namespace octanet
