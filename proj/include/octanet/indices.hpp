#pragma once

#include "octanet/graph.hpp"
#include "octanet/radical.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace octanet {

class UnknownIndexError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A degree-based index: the sum over edges of a symmetric per-class term.
struct IndexSpec {
  using PerEdge = std::function<RadicalValue(long, long)>;

  std::string name;
  Basis basis = Basis::Degree;
  PerEdge per_edge;
  std::optional<int> min_n;
};

/// (a*b)^alpha for half-integer alpha.
RadicalValue randic_term(long a, long b, const Rational& alpha);

/// Names accepted by builtin(): randic1, randic1/2, randic-1, randic-1/2,
/// zagreb1, zagreb2, abc, ga, abc4, ga5.
const std::vector<std::string>& builtin_index_names();

/// Throws UnknownIndexError.
IndexSpec builtin(const std::string& name);

/// Sum over edge classes of count * per_edge(class).
RadicalValue compute(const Network& g, const IndexSpec& spec);

/// Half the sum of all ordered-pair distances. Throws DisconnectedGraph.
Rational wiener(const Network& g);

}  // namespace octanet
