#pragma once

// Exact arithmetic over Q-linear combinations of square roots of squarefree
// positive integers. Every index value and closed form lives in this domain.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace octanet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ArithErrc { DivisionByZero, NonInvertibleDenominator, NegativeRadicand };

class ArithmeticError : public std::domain_error {
public:
  ArithmeticError(ArithErrc code, const std::string& what)
      : std::domain_error(what), code_(code) {}
  ArithErrc code() const noexcept { return code_; }

private:
  ArithErrc code_;
};

struct SquarefreeSplit {
  BigInt root;        // s
  BigInt squarefree;  // k, with m = s*s*k
};

/// Factor m >= 1 as s^2 * k with k squarefree (trial division).
SquarefreeSplit squarefree_split(const BigInt& m);

bool is_squarefree(const BigInt& k);

/// Renders a rational as `a` or `a/b`.
std::string to_string(const Rational& q);

/// Sum of q_k * sqrt(k) over squarefree keys k. The key 1 carries the
/// rational part. Zero coefficients are never stored, so two values are equal
/// exactly when their term maps are equal.
class RadicalValue {
public:
  using Terms = std::map<BigInt, Rational>;

  RadicalValue() = default;
  RadicalValue(int value);  // NOLINT(google-explicit-constructor)
  RadicalValue(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// q * sqrt(m) for any m >= 1; m need not be squarefree.
  static RadicalValue scaled_sqrt(const Rational& q, const BigInt& m);
  static RadicalValue sqrt(const BigInt& m) { return scaled_sqrt(Rational(1), m); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// Coefficient of sqrt(1); zero when absent.
  Rational rational_part() const;
  /// Coefficient of sqrt(k) for squarefree k; zero when absent.
  Rational coefficient(const BigInt& k) const;

  RadicalValue operator-() const;
  RadicalValue& operator+=(const RadicalValue& rhs);
  RadicalValue& operator-=(const RadicalValue& rhs);
  RadicalValue& operator*=(const RadicalValue& rhs);
  /// Only single-term divisors are accepted.
  RadicalValue& operator/=(const RadicalValue& rhs);

  friend RadicalValue operator+(RadicalValue a, const RadicalValue& b) { return a += b; }
  friend RadicalValue operator-(RadicalValue a, const RadicalValue& b) { return a -= b; }
  friend RadicalValue operator*(RadicalValue a, const RadicalValue& b) { return a *= b; }
  friend RadicalValue operator/(RadicalValue a, const RadicalValue& b) { return a /= b; }
  friend bool operator==(const RadicalValue& a, const RadicalValue& b) { return a.terms_ == b.terms_; }

  /// Canonical text: `36 + 24*sqrt(2)`, `-3/4*sqrt(14)`, `0`.
  std::string str() const;
  /// Correctly rounded decimal rendering with `digits` fractional digits.
  std::string approx(int digits) const;
  double to_double() const;

private:
  void add_term(const BigInt& k, const Rational& q);
  Terms terms_;
};

/// Exact square root of a nonnegative rational, in squarefree form.
RadicalValue sqrt_of_rational(const Rational& q);

std::ostream& operator<<(std::ostream& os, const RadicalValue& v);

}  // namespace octanet
