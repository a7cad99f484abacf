#include "octanet/graph_io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace octanet {

using nlohmann::json;

namespace {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw GraphError(GraphErrc::BadInput, "zero denominator in coordinate '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw GraphError(GraphErrc::BadInput, "bad coordinate '" + text + "'");
  }
}

std::string dot_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string to_json(const Network& g) {
  json doc;
  doc["family"] = family_name(g.family());
  doc["n"] = g.dimension() ? json(*g.dimension()) : json(nullptr);
  json vertices = json::array();
  for (VertexId id = 0; id < g.vertex_count(); ++id) {
    const auto& r = g.vertex(id);
    vertices.push_back({{"id", id},
                        {"key", r.key.str()},
                        {"role", role_name(r.role)},
                        {"x", to_string(r.position.x)},
                        {"y", to_string(r.position.y)}});
  }
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

Network network_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(GraphErrc::BadInput, std::string("graph file is not valid JSON: ") + e.what());
  }
  try {
    Family family = Family::Custom;
    if (doc.contains("family") && doc["family"].is_string()) family = parse_family(doc["family"].get<std::string>());
    std::optional<int> n;
    if (doc.contains("n") && doc["n"].is_number_integer()) n = doc["n"].get<int>();

    Network::Builder builder(family, n);
    for (const auto& v : doc.at("vertices")) {
      auto id = v.at("id").get<std::int32_t>();
      Role role = v.contains("role") ? parse_role(v["role"].get<std::string>()) : Role::Plain;
      Point p;
      if (v.contains("x")) p.x = parse_rational(v["x"].get<std::string>());
      if (v.contains("y")) p.y = parse_rational(v["y"].get<std::string>());
      builder.add_vertex(VertexKey::plain(id), role, p);
    }
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError(GraphErrc::BadInput, "edge entries must be [u, v] pairs");
      builder.add_edge(VertexKey::plain(e[0].get<std::int32_t>()), VertexKey::plain(e[1].get<std::int32_t>()));
    }
    return builder.build();
  } catch (const json::exception& e) {
    throw GraphError(GraphErrc::BadInput, std::string("malformed graph file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw GraphError(GraphErrc::BadInput, std::string("malformed graph file: ") + e.what());
  }
}

std::string to_dot(const Network& g) {
  static const double kSqrt3 = std::sqrt(3.0);
  std::ostringstream out;
  std::string name = family_name(g.family());
  if (g.dimension()) name += "_" + std::to_string(*g.dimension());
  out << "graph " << name << " {\n";
  out << "  node [label=\"\", width=0.08, height=0.08];\n";
  for (VertexId id = 0; id < g.vertex_count(); ++id) {
    const auto& r = g.vertex(id);
    const char* shape = r.role == Role::Centroid ? "box" : "circle";
    out << "  " << id << " [shape=" << shape << ", tooltip=\"" << r.key.str() << "\", pos=\""
        << dot_number(r.position.x.convert_to<double>()) << ","
        << dot_number(kSqrt3 * r.position.y.convert_to<double>()) << "!\"];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edgelist(const Network& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace octanet
