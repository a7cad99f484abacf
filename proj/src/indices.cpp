#include "octanet/indices.hpp"

#include <deque>

namespace octanet {

RadicalValue randic_term(long a, long b, const Rational& alpha) {
  const Rational twice = alpha * 2;
  if (boost::multiprecision::denominator(twice) != 1) {
    throw std::invalid_argument("randic exponent must be a half-integer, got " + to_string(alpha));
  }
  const BigInt half_steps = boost::multiprecision::numerator(twice);
  const auto power = static_cast<unsigned>(abs(half_steps).convert_to<unsigned long>());
  // (ab)^(h/2) = sqrt((ab)^h)
  Rational base = boost::multiprecision::pow(BigInt(a) * BigInt(b), power);
  if (half_steps < 0) base = Rational(1) / base;
  return sqrt_of_rational(base);
}

namespace {

RadicalValue abc_term(long a, long b) { return sqrt_of_rational(Rational(a + b - 2, a * b)); }

RadicalValue ga_term(long a, long b) {
  return RadicalValue::scaled_sqrt(Rational(2, a + b), BigInt(a) * BigInt(b));
}

IndexSpec randic(const std::string& name, Rational alpha) {
  return {name, Basis::Degree, [alpha](long a, long b) { return randic_term(a, b, alpha); }, std::nullopt};
}

}  // namespace

const std::vector<std::string>& builtin_index_names() {
  static const std::vector<std::string> names = {"randic1", "randic1/2", "randic-1", "randic-1/2", "zagreb1",
                                                 "zagreb2", "abc",       "ga",       "abc4",       "ga5"};
  return names;
}

IndexSpec builtin(const std::string& name) {
  if (name == "randic1" || name == "zagreb2") return randic(name, Rational(1));
  if (name == "randic1/2") return randic(name, Rational(1, 2));
  if (name == "randic-1") return randic(name, Rational(-1));
  if (name == "randic-1/2") return randic(name, Rational(-1, 2));
  if (name == "zagreb1") {
    return {name, Basis::Degree, [](long a, long b) { return RadicalValue(Rational(a + b)); }, std::nullopt};
  }
  if (name == "abc") return {name, Basis::Degree, abc_term, std::nullopt};
  if (name == "ga") return {name, Basis::Degree, ga_term, std::nullopt};
  if (name == "abc4") return {name, Basis::DegreeSum, abc_term, std::nullopt};
  if (name == "ga5") return {name, Basis::DegreeSum, ga_term, std::nullopt};
  throw UnknownIndexError("unknown index '" + name + "'");
}

RadicalValue compute(const Network& g, const IndexSpec& spec) {
  RadicalValue total;
  for (const auto& [cls, count] : edge_partition(g, spec.basis).classes) {
    total += RadicalValue(Rational(count)) * spec.per_edge(cls.first, cls.second);
  }
  return total;
}

Rational wiener(const Network& g) {
  const std::size_t n = g.vertex_count();
  BigInt ordered_sum = 0;
  std::vector<int> dist(n);
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<VertexId> frontier{s};
    std::size_t reached = 1;
    long row = 0;
    while (!frontier.empty()) {
      VertexId u = frontier.front();
      frontier.pop_front();
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[u] + 1;
        row += dist[w];
        ++reached;
        frontier.push_back(w);
      }
    }
    if (reached != n) throw GraphError(GraphErrc::DisconnectedGraph, "Wiener index needs a connected graph");
    ordered_sum += row;
  }
  return Rational(ordered_sum, BigInt(2));
}

}  // namespace octanet
