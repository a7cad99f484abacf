#pragma once

#include "octanet/graph.hpp"
#include "octanet/radical.hpp"

#include <random>

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed0c7a);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline octanet::Rational random_rational(long bound = 50) {
  long den = uniform(1, bound);
  return octanet::Rational(uniform(-bound, bound), den);
}

// Keys that are squarefree, so terms can be built directly.
inline const std::vector<long>& squarefree_keys() {
  static const std::vector<long> keys = {1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 30, 35, 38, 46, 94, 110, 330};
  return keys;
}

inline octanet::RadicalValue random_radical(int max_terms = 4) {
  octanet::RadicalValue v;
  const int terms = static_cast<int>(uniform(0, max_terms));
  for (int i = 0; i < terms; ++i) {
    const auto& keys = squarefree_keys();
    long k = keys[static_cast<std::size_t>(uniform(0, static_cast<long>(keys.size()) - 1))];
    v += octanet::RadicalValue::scaled_sqrt(random_rational(), k);
  }
  return v;
}

// Random simple graph on n vertices with Plain keys.
inline octanet::Network random_graph(int n, double p) {
  octanet::Network::Builder b(octanet::Family::Custom, std::nullopt);
  for (int i = 0; i < n; ++i) b.add_vertex(octanet::VertexKey::plain(i), octanet::Role::Plain);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng())) b.add_edge(octanet::VertexKey::plain(i), octanet::VertexKey::plain(j));
    }
  }
  return b.build();
}

}  // namespace testing
