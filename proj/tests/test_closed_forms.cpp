#include "doctest.h"
#include "support.hpp"

#include "octanet/closed_forms.hpp"
#include "octanet/indices.hpp"

#include "json.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace octanet;

namespace {

RadicalValue r(long a, long b = 1) { return RadicalValue(Rational(a, b)); }
RadicalValue sq(long k) { return RadicalValue::sqrt(k); }

const ClosedForm N = ClosedForm::n();

const std::vector<Family> kFamilies = {Family::POH, Family::TP, Family::DPOH};

// Degree-table row counts as plain doubles, keyed by class.
std::map<std::pair<long, long>, double> degree_rows(Family f, double n) {
  switch (f) {
    case Family::POH: return {{{4, 4}, 18 * n * n + 12 * n}, {{4, 8}, 36 * n * n}, {{8, 8}, 18 * n * n - 12 * n}};
    case Family::TP: return {{{3, 3}, 18 * n * n + 6 * n}, {{3, 6}, 18 * n * n + 6 * n}, {{6, 6}, 18 * n * n - 12 * n}};
    default:
      return {{{4, 4}, 54 * n * n - 30 * n + 6},
              {{4, 8}, 108 * n * n - 108 * n + 36},
              {{8, 8}, 54 * n * n - 78 * n + 30}};
  }
}

double term_double(const std::string& name, double a, double b) {
  if (name == "randic1") return a * b;
  if (name == "randic1/2") return std::sqrt(a * b);
  if (name == "randic-1") return 1 / (a * b);
  if (name == "randic-1/2") return 1 / std::sqrt(a * b);
  if (name == "zagreb1") return a + b;
  if (name == "abc") return std::sqrt((a + b - 2) / (a * b));
  return 2 * std::sqrt(a * b) / (a + b);
}

ClosedForm sum_rows(Family f, Basis basis, const std::map<std::string, Provenance>& overrides = {}) {
  std::set<std::string> seen;
  ClosedForm total;
  for (const auto& c : registry()) {
    if (c.family != f || quantity_kind(c.quantity) != QuantityKind::TableRow) continue;
    if (table_row_class(c.quantity).first != basis || seen.count(c.quantity)) continue;
    const auto it = overrides.find(c.quantity);
    const Provenance want = it == overrides.end() ? Provenance::TheoremStatement : it->second;
    const ClaimRecord* rec = lookup(f, c.quantity, want);
    REQUIRE(rec != nullptr);
    total += rec->claimed;
    seen.insert(c.quantity);
  }
  return total;
}

}  // namespace

TEST_SUITE("closed_forms") {
  TEST_CASE("polynomial arithmetic") {
    CHECK((N + 1) * (N - 1) == N * N - 1);
    CHECK((N * N - 1).evaluate(7) == r(48));
    CHECK(ClosedForm(0).coefficients().empty());
    CHECK((N - N) == ClosedForm());
    const ClosedForm f = (3 + 2 * sq(2)) * N * N - 5;
    const auto coeffs = f.coefficients();
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0].second == 2);
    CHECK(coeffs[0].first == 3 + 2 * sq(2));
    CHECK(coeffs[1].second == 0);
    CHECK(coeffs[1].first == r(-5));
    CHECK((N.with_min_n(2) + N.with_min_n(3)).min_n() == 3);
    CHECK((N.with_min_n(2) * 4).min_n() == 2);
    CHECK(N.with_min_n(2) != N);
  }

  TEST_CASE("polynomial arithmetic against direct evaluation") {
    for (int trial = 0; trial < 300; ++trial) {
      ClosedForm a;
      ClosedForm b;
      for (int p = 0; p < 3; ++p) {
        ClosedForm power = 1;
        for (int i = 0; i < p; ++i) power *= N;
        a += testing::random_radical(2) * power;
        b += testing::random_radical(2) * power;
      }
      const int n = static_cast<int>(testing::uniform(-5, 9));
      CHECK((a * b).evaluate_unchecked(n) == a.evaluate_unchecked(n) * b.evaluate_unchecked(n));
      CHECK((a - b).evaluate_unchecked(n) == a.evaluate_unchecked(n) - b.evaluate_unchecked(n));
      CHECK((-a).evaluate_unchecked(n) == -a.evaluate_unchecked(n));
    }
  }

  TEST_CASE("rendering") {
    CHECK(ClosedForm().str() == "0");
    CHECK(N.str() == "n");
    CHECK((-N).str() == "-n");
    CHECK((N * N - 21 * N).str() == "n^2 - 21*n");
    CHECK(((216 + 144 * sq(2)) * N * N - 48 * N).str() == "(216 + 144*sqrt(2))*n^2 - 48*n");
    CHECK((r(3, 4) * sq(14) * N + 2).str() == "3/4*sqrt(14)*n + 2");
  }

  TEST_CASE("lookups and evaluation") {
    const ClaimRecord* m1 = lookup(Family::POH, "zagreb1");
    REQUIRE(m1 != nullptr);
    CHECK(m1->claimed == 96 * N * (9 * N - 1));
    CHECK(m1->claimed.min_n() == 1);
    CHECK(m1->claimed.evaluate(1) == r(768));
    CHECK(m1->claimed.evaluate(2) == r(3264));
    CHECK(lookup(Family::POH, "randic1")->claimed.evaluate(2) == r(9216));
    CHECK(lookup(Family::POH, "ga")->claimed.evaluate(1) == 36 + 24 * sq(2));
    CHECK(lookup(Family::DPOH, "ga")->claimed.evaluate(1) == 36 + 24 * sq(2));
    CHECK(lookup(Family::POH, "ga", Provenance::ProofLine)->claimed.evaluate(1) == 8 + r(32, 3) * sq(2));
    CHECK(lookup(Family::POH, "ga5")->claimed.min_n() == 2);
    CHECK(lookup(Family::DPOH, "abc4")->claimed.min_n() == 3);
    CHECK_THROWS_AS(lookup(Family::POH, "ga5")->claimed.evaluate(1), BelowValidityError);
    CHECK_NOTHROW(lookup(Family::POH, "ga5")->claimed.evaluate_unchecked(1));
    CHECK(lookup(Family::DPOH, "zagreb1", Provenance::Corrected)->claimed == 96 * (27 * N * N - 29 * N + 10));
    CHECK(lookup(Family::DPOH, "zagreb1")->claimed == ClosedForm(96 * (27 * N * N - 19)));
    CHECK(lookup(Family::POH, "hyper") == nullptr);
    CHECK(lookup(Family::Custom, "zagreb1") == nullptr);
  }

  TEST_CASE("quantity names") {
    CHECK(quantity_kind("vertices") == QuantityKind::VertexCount);
    CHECK(quantity_kind("edges") == QuantityKind::EdgeCount);
    CHECK(quantity_kind("degsum(12,24)") == QuantityKind::TableRow);
    CHECK(quantity_kind("ga5") == QuantityKind::Index);
    CHECK(table_row_class("degree(4,8)") == std::pair<Basis, EdgeClass>{Basis::Degree, {4, 8}});
    CHECK(table_row_quantity(Basis::DegreeSum, {20, 44}) == "degsum(20,44)");
    CHECK_THROWS_AS(table_row_class("degree(4)"), std::invalid_argument);
  }

  TEST_CASE("every claimed quantity is registered") {
    const std::vector<std::string> indices = {"randic1", "randic1/2", "randic-1", "randic-1/2", "zagreb1",
                                              "abc",     "ga",        "abc4",     "ga5"};
    for (Family f : kFamilies) {
      for (const auto& q : indices) {
        INFO(family_name(f) << " " << q);
        CHECK(lookup(f, q) != nullptr);
      }
      bool vertices = false;
      bool edges = false;
      for (const auto& c : registry()) {
        if (c.family != f) continue;
        vertices |= c.quantity == "vertices";
        edges |= c.quantity == "edges";
      }
      CHECK(vertices);
      CHECK(edges);
    }
    std::set<std::pair<Family, std::string>> rows;
    for (const auto& c : registry()) {
      if (quantity_kind(c.quantity) == QuantityKind::TableRow) rows.emplace(c.family, c.quantity);
    }
    CHECK(rows.size() == 45);
    CHECK(registry().size() == 85);
  }

  TEST_CASE("each claim has one record per provenance") {
    std::set<std::tuple<Family, std::string, Provenance>> keys;
    for (const auto& c : registry()) {
      CHECK(keys.emplace(c.family, c.quantity, c.provenance).second);
      CHECK_FALSE(c.citation.source.empty());
      CHECK_FALSE(c.citation.quote.empty());
      CHECK(registry_position(c) < registry().size());
      CHECK(&registry()[registry_position(c)] == &c);
    }
  }

  TEST_CASE("degree-table polynomials reproduce the index formulas") {
    const std::vector<std::string> names = {"randic1", "randic1/2", "randic-1", "randic-1/2", "zagreb1", "abc", "ga"};
    for (Family f : kFamilies) {
      for (const auto& name : names) {
        const ClaimRecord* claim = lookup(f, name);
        if (f == Family::DPOH && name == "zagreb1") claim = lookup(f, name, Provenance::Corrected);
        REQUIRE(claim != nullptr);
        for (int n = 1; n <= 8; ++n) {
          double expected = 0;
          for (const auto& [cls, count] : degree_rows(f, n)) {
            expected += count * term_double(name, static_cast<double>(cls.first), static_cast<double>(cls.second));
          }
          INFO(family_name(f) << " " << name << " n=" << n);
          CHECK(claim->claimed.evaluate(n).to_double() == doctest::Approx(expected).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("degree-sum table rows add up to the edge count") {
    CHECK(sum_rows(Family::POH, Basis::DegreeSum) == (72 * N * N).with_min_n(2));
    CHECK(sum_rows(Family::TP, Basis::DegreeSum, {{"degsum(12,12)", Provenance::Corrected}}) ==
          (54 * N * N).with_min_n(2));
    CHECK(sum_rows(Family::TP, Basis::DegreeSum) != (54 * N * N).with_min_n(2));
    CHECK(sum_rows(Family::DPOH, Basis::DegreeSum, {{"degsum(24,24)", Provenance::Prose}}) ==
          (216 * N * N - 216 * N + 72).with_min_n(3));
    CHECK(sum_rows(Family::POH, Basis::Degree) == 72 * N * N);
    CHECK(sum_rows(Family::TP, Basis::Degree) == 54 * N * N);
    CHECK(sum_rows(Family::DPOH, Basis::Degree) == 216 * N * N - 216 * N + 72);
  }

  TEST_CASE("claims document") {
    const auto doc = nlohmann::json::parse(claims_json());
    REQUIRE(doc.is_array());
    CHECK(doc.size() == registry().size());
    const auto& first = doc.at(0);
    CHECK(first.at("family") == "POH");
    CHECK(first.at("quantity") == "randic1");
    CHECK(first.at("provenance") == "theorem-statement");
    CHECK(first.at("min_n") == 1);
    CHECK(first.at("claimed") == "2592*n^2 - 576*n");
    CHECK(first.at("coefficients").size() == 2);
    CHECK(first.at("citation").at("quote") == "288n(-2+9n)");
    std::set<std::string> provenances;
    for (const auto& rec : doc) provenances.insert(rec.at("provenance").get<std::string>());
    CHECK(provenances == std::set<std::string>{"theorem-statement", "proof-line", "prose", "corrected"});
    CHECK(claims_json() == claims_json());
  }
}
