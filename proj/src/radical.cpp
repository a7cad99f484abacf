#include "octanet/radical.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace octanet {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  // b > 0
  BigInt q = a / b;
  if (a < 0 && q * b != a) --q;
  return q;
}

std::size_t decimal_width(const BigInt& v) { return v.str().size(); }

std::string format_scaled(const BigInt& scaled, int digits) {
  BigInt magnitude = abs(scaled);
  std::string body = magnitude.str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return scaled < 0 ? "-" + body : body;
}

}  // namespace

namespace {

SquarefreeSplit split_native(std::uint64_t rest) {
  std::uint64_t root = 1;
  std::uint64_t squarefree = 1;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    int multiplicity = 0;
    while (rest % p == 0) {
      rest /= p;
      ++multiplicity;
    }
    for (int i = 0; i + 1 < multiplicity; i += 2) root *= p;
    if (multiplicity % 2 == 1) squarefree *= p;
  }
  return {BigInt(root), BigInt(squarefree) * rest};
}

}  // namespace

SquarefreeSplit squarefree_split(const BigInt& m) {
  if (m < 1) throw std::invalid_argument("squarefree_split: argument must be >= 1");
  if (m < (BigInt(1) << 62)) return split_native(m.convert_to<std::uint64_t>());
  BigInt rest = m;
  BigInt root = 1;
  BigInt squarefree = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    int multiplicity = 0;
    while (rest % p == 0) {
      rest /= p;
      ++multiplicity;
    }
    for (int i = 0; i + 1 < multiplicity; i += 2) root *= p;
    if (multiplicity % 2 == 1) squarefree *= p;
  }
  squarefree *= rest;
  return {root, squarefree};
}

bool is_squarefree(const BigInt& k) { return k >= 1 && squarefree_split(k).root == 1; }

std::string to_string(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

RadicalValue::RadicalValue(int value) : RadicalValue(Rational(value)) {}

RadicalValue::RadicalValue(const Rational& value) {
  if (value != 0) terms_.emplace(BigInt(1), value);
}

RadicalValue RadicalValue::scaled_sqrt(const Rational& q, const BigInt& m) {
  if (m < 0) throw ArithmeticError(ArithErrc::NegativeRadicand, "square root of negative integer");
  RadicalValue out;
  if (m == 0 || q == 0) return out;
  auto [root, k] = squarefree_split(m);
  out.add_term(k, q * Rational(root));
  return out;
}

bool RadicalValue::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalValue::rational_part() const { return coefficient(BigInt(1)); }

Rational RadicalValue::coefficient(const BigInt& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RadicalValue::add_term(const BigInt& k, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.emplace(k, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

RadicalValue RadicalValue::operator-() const {
  RadicalValue out = *this;
  for (auto& [k, q] : out.terms_) q = -q;
  return out;
}

RadicalValue& RadicalValue::operator+=(const RadicalValue& rhs) {
  for (const auto& [k, q] : rhs.terms_) add_term(k, q);
  return *this;
}

RadicalValue& RadicalValue::operator-=(const RadicalValue& rhs) {
  for (const auto& [k, q] : rhs.terms_) add_term(k, -q);
  return *this;
}

RadicalValue& RadicalValue::operator*=(const RadicalValue& rhs) {
  RadicalValue product;
  for (const auto& [k1, q1] : terms_) {
    for (const auto& [k2, q2] : rhs.terms_) {
      // sqrt(k1)*sqrt(k2) = g*sqrt(k1/g * k2/g) for squarefree k1, k2.
      BigInt g = gcd(k1, k2);
      product.add_term((k1 / g) * (k2 / g), q1 * q2 * Rational(g));
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

RadicalValue& RadicalValue::operator/=(const RadicalValue& rhs) {
  if (rhs.is_zero()) throw ArithmeticError(ArithErrc::DivisionByZero, "division by zero");
  if (rhs.terms_.size() > 1) {
    throw ArithmeticError(ArithErrc::NonInvertibleDenominator,
                          "divisor " + rhs.str() + " has more than one term");
  }
  const auto& [k, q] = *rhs.terms_.begin();
  // 1/(q*sqrt(k)) = sqrt(k)/(q*k)
  RadicalValue inverse;
  inverse.add_term(k, Rational(1) / (q * Rational(k)));
  return *this *= inverse;
}

std::string RadicalValue::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, q] : terms_) {
    const bool negative = q < 0;
    const Rational magnitude = negative ? Rational(-q) : q;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 1) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += "sqrt(" + k.str() + ")";
    }
    first = false;
  }
  return out;
}

std::string RadicalValue::approx(int digits) const {
  if (digits < 1) throw std::invalid_argument("approx: precision must be >= 1");
  const BigInt unit = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));

  if (is_rational()) {
    Rational scaled = rational_part() * Rational(unit);
    BigInt num = boost::multiprecision::numerator(scaled);
    const BigInt& den = boost::multiprecision::denominator(scaled);
    // Round half away from zero.
    BigInt rounded = (2 * abs(num) + den) / (2 * den);
    return format_scaled(num < 0 ? BigInt(-rounded) : rounded, digits);
  }

  // Each term is truncated with error below |q| + 1 units of the working
  // scale, so the true value lies strictly inside [acc - bound, acc + bound].
  BigInt bound = 0;
  for (const auto& [k, q] : terms_) {
    bound += abs(boost::multiprecision::numerator(q)) / boost::multiprecision::denominator(q) + 2;
  }
  auto guard = static_cast<unsigned>(decimal_width(bound) + 2);
  for (;;) {
    const BigInt extra = boost::multiprecision::pow(BigInt(10), guard);
    const BigInt scale = unit * extra;
    BigInt acc = 0;
    for (const auto& [k, q] : terms_) {
      BigInt root = (k == 1) ? scale : BigInt(boost::multiprecision::sqrt(BigInt(k * scale * scale)));
      acc += floor_div(boost::multiprecision::numerator(q) * root, boost::multiprecision::denominator(q));
    }
    const BigInt half = extra / 2;
    BigInt lo = floor_div(acc - bound + half, extra);
    BigInt hi = floor_div(acc + bound + half, extra);
    // An irrational value never sits on a rounding tie, so this terminates.
    if (lo == hi) return format_scaled(lo, digits);
    guard *= 2;
  }
}

double RadicalValue::to_double() const {
  double sum = 0.0;
  for (const auto& [k, q] : terms_) {
    sum += q.convert_to<double>() * std::sqrt(k.convert_to<double>());
  }
  return sum;
}

RadicalValue sqrt_of_rational(const Rational& q) {
  if (q < 0) {
    throw ArithmeticError(ArithErrc::NegativeRadicand, "square root of negative value " + to_string(q));
  }
  // sqrt(n/d) = sqrt(n*d)/d
  const BigInt& den = boost::multiprecision::denominator(q);
  return RadicalValue::scaled_sqrt(Rational(BigInt(1), den), boost::multiprecision::numerator(q) * den);
}

std::ostream& operator<<(std::ostream& os, const RadicalValue& v) { return os << v.str(); }

}  // namespace octanet
