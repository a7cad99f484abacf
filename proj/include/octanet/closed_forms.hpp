#pragma once

#include "octanet/graph.hpp"
#include "octanet/radical.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octanet {

class BelowValidityError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Polynomial in the dimension n with RadicalValue coefficients, valid for
/// n >= min_n.
class ClosedForm {
public:
  ClosedForm() = default;
  ClosedForm(int constant);                  // NOLINT(google-explicit-constructor)
  ClosedForm(const RadicalValue& constant);  // NOLINT(google-explicit-constructor)

  /// The polynomial `n`.
  static ClosedForm n();

  ClosedForm& operator+=(const ClosedForm& rhs);
  ClosedForm& operator-=(const ClosedForm& rhs);
  ClosedForm& operator*=(const ClosedForm& rhs);
  ClosedForm operator-() const;

  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
  friend ClosedForm operator*(ClosedForm a, const ClosedForm& b) { return a *= b; }
  friend bool operator==(const ClosedForm& a, const ClosedForm& b) {
    return a.coefficients() == b.coefficients() && a.min_n_ == b.min_n_;
  }

  ClosedForm with_min_n(int min_n) const;
  int min_n() const noexcept { return min_n_; }

  /// (coefficient, power) pairs, powers distinct and descending.
  std::vector<std::pair<RadicalValue, int>> coefficients() const;

  /// Throws BelowValidityError for n < min_n.
  RadicalValue evaluate(int n) const;
  RadicalValue evaluate_unchecked(int n) const;

  /// e.g. `(216 + 144*sqrt(2))*n^2 - 48*n`.
  std::string str() const;

private:
  std::vector<RadicalValue> by_power_;  // index = power of n; no trailing zeros
  int min_n_ = 1;
  void trim();
};

enum class Provenance { TheoremStatement, ProofLine, Prose, Corrected };

std::string provenance_name(Provenance p);  // theorem-statement, proof-line, prose, corrected

struct Citation {
  std::string source;  // theorem or table label
  std::string quote;   // verbatim formula text as printed
};

/// Quantity names: an index name (randic1, ..., ga5), `vertices`, `edges`,
/// `degree(a,b)` or `degsum(a,b)` for a partition table row.
struct ClaimRecord {
  Family family = Family::POH;
  std::string quantity;
  ClosedForm claimed;
  Citation citation;
  Provenance provenance = Provenance::TheoremStatement;
};

enum class QuantityKind { Index, VertexCount, EdgeCount, TableRow };

QuantityKind quantity_kind(const std::string& quantity);
/// For `degree(a,b)` / `degsum(a,b)`: the basis and class.
std::pair<Basis, EdgeClass> table_row_class(const std::string& quantity);
std::string table_row_quantity(Basis basis, EdgeClass cls);

/// Every claimed formula, in document order; variants follow their claim.
const std::vector<ClaimRecord>& registry();

/// Nullptr when absent.
const ClaimRecord* lookup(Family family, const std::string& quantity,
                          Provenance provenance = Provenance::TheoremStatement);

/// Position of a record within registry().
std::size_t registry_position(const ClaimRecord& claim);

/// The registry as a JSON document for audit.
std::string claims_json();

}  // namespace octanet
