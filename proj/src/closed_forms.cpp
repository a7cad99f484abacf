#include "octanet/closed_forms.hpp"

#include "json.hpp"

#include <algorithm>
#include <regex>

namespace octanet {

ClosedForm::ClosedForm(int constant) : ClosedForm(RadicalValue(constant)) {}

ClosedForm::ClosedForm(const RadicalValue& constant) {
  by_power_.push_back(constant);
  trim();
}

ClosedForm ClosedForm::n() {
  ClosedForm f;
  f.by_power_ = {RadicalValue(0), RadicalValue(1)};
  return f;
}

void ClosedForm::trim() {
  while (!by_power_.empty() && by_power_.back().is_zero()) by_power_.pop_back();
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& rhs) {
  if (rhs.by_power_.size() > by_power_.size()) by_power_.resize(rhs.by_power_.size());
  for (std::size_t p = 0; p < rhs.by_power_.size(); ++p) by_power_[p] += rhs.by_power_[p];
  min_n_ = std::max(min_n_, rhs.min_n_);
  trim();
  return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& rhs) { return *this += -rhs; }

ClosedForm& ClosedForm::operator*=(const ClosedForm& rhs) {
  std::vector<RadicalValue> product;
  if (!by_power_.empty() && !rhs.by_power_.empty()) {
    product.resize(by_power_.size() + rhs.by_power_.size() - 1);
    for (std::size_t i = 0; i < by_power_.size(); ++i) {
      for (std::size_t j = 0; j < rhs.by_power_.size(); ++j) product[i + j] += by_power_[i] * rhs.by_power_[j];
    }
  }
  by_power_ = std::move(product);
  min_n_ = std::max(min_n_, rhs.min_n_);
  trim();
  return *this;
}

ClosedForm ClosedForm::operator-() const {
  ClosedForm f = *this;
  for (auto& c : f.by_power_) c = -c;
  return f;
}

ClosedForm ClosedForm::with_min_n(int min_n) const {
  ClosedForm f = *this;
  f.min_n_ = min_n;
  return f;
}

std::vector<std::pair<RadicalValue, int>> ClosedForm::coefficients() const {
  std::vector<std::pair<RadicalValue, int>> out;
  for (std::size_t p = by_power_.size(); p-- > 0;) {
    if (!by_power_[p].is_zero()) out.emplace_back(by_power_[p], static_cast<int>(p));
  }
  return out;
}

RadicalValue ClosedForm::evaluate(int n) const {
  if (n < min_n_) {
    throw BelowValidityError("n = " + std::to_string(n) + " is below the validity floor " + std::to_string(min_n_));
  }
  return evaluate_unchecked(n);
}

RadicalValue ClosedForm::evaluate_unchecked(int n) const {
  RadicalValue acc;
  for (std::size_t p = by_power_.size(); p-- > 0;) acc = acc * RadicalValue(n) + by_power_[p];
  return acc;
}

std::string ClosedForm::str() const {
  const auto coeffs = coefficients();
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [c, p] : coeffs) {
    std::string body;
    bool negative = false;
    if (c.terms().size() == 1) {
      body = c.str();
      if (body.front() == '-') {
        negative = true;
        body.erase(0, 1);
      }
      if (p > 0 && body == "1") body.clear();
    } else {
      body = "(" + c.str() + ")";
    }
    if (p > 0) {
      if (!body.empty()) body += "*";
      body += p == 1 ? "n" : "n^" + std::to_string(p);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::TheoremStatement: return "theorem-statement";
    case Provenance::ProofLine: return "proof-line";
    case Provenance::Prose: return "prose";
    case Provenance::Corrected: return "corrected";
  }
  return "?";
}

namespace {

const std::regex& row_pattern() {
  static const std::regex re(R"(^(degree|degsum)\((\d+),(\d+)\)$)");
  return re;
}

}  // namespace

QuantityKind quantity_kind(const std::string& quantity) {
  if (quantity == "vertices") return QuantityKind::VertexCount;
  if (quantity == "edges") return QuantityKind::EdgeCount;
  if (std::regex_match(quantity, row_pattern())) return QuantityKind::TableRow;
  return QuantityKind::Index;
}

std::pair<Basis, EdgeClass> table_row_class(const std::string& quantity) {
  std::smatch m;
  if (!std::regex_match(quantity, m, row_pattern())) {
    throw std::invalid_argument("'" + quantity + "' is not a table row quantity");
  }
  return {m[1] == "degree" ? Basis::Degree : Basis::DegreeSum, {std::stol(m[2]), std::stol(m[3])}};
}

std::string table_row_quantity(Basis basis, EdgeClass cls) {
  return std::string(basis == Basis::Degree ? "degree" : "degsum") + "(" + std::to_string(cls.first) + "," +
         std::to_string(cls.second) + ")";
}

namespace {

RadicalValue q(long a, long b = 1) { return RadicalValue(Rational(a, b)); }
RadicalValue s(long k) { return RadicalValue::sqrt(k); }
RadicalValue sq(long a, long b) { return sqrt_of_rational(Rational(a, b)); }

class Builder {
public:
  explicit Builder(std::vector<ClaimRecord>& out) : out_(out) {}

  void add(Family f, std::string quantity, const ClosedForm& cf, std::string source, std::string quote,
           Provenance p = Provenance::TheoremStatement) {
    out_.push_back({f, std::move(quantity), cf, {std::move(source), std::move(quote)}, p});
  }

  void row(Family f, Basis basis, long a, long b, const ClosedForm& cf, const std::string& table,
           const std::string& cell, Provenance p = Provenance::TheoremStatement) {
    const std::string cls = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    add(f, table_row_quantity(basis, {a, b}), cf, table, "$" + cls + "$ & $" + cell + "$", p);
  }

private:
  std::vector<ClaimRecord>& out_;
};

void add_poh(Builder& b) {
  const ClosedForm n = ClosedForm::n();
  const Family F = Family::POH;

  b.add(F, "randic1", 288 * n * (-2 + 9 * n), "Theorem 2.1", "288n(-2+9n)");
  b.add(F, "randic1/2", 24 * n * (-2 + (9 + 6 * s(2)) * n), "Theorem 2.1", R"(24n(-2+(9+6\sqrt{2})n))");
  b.add(F, "randic-1", q(9, 32) * n * (2 + 9 * n), "Theorem 2.1", R"(\frac{9}{32}n(2+9n))");
  b.add(F, "randic-1/2", q(3, 4) * n * (2 + (9 + 6 * s(2)) * n), "Theorem 2.1",
        R"(\frac{3}{4}n(2+(9+6\sqrt{2})n))");
  b.add(F, "zagreb1", 96 * n * (-1 + 9 * n), "Theorem 2.2", "M_{1}(POH(n))=96n(-1+9n)");
  b.add(F, "abc", q(3, 4) * n * (4 * s(6) - 2 * s(14) + 3 * (4 * s(5) + 2 * s(6) + s(14)) * n), "Theorem 2.3",
        R"(\frac{3}{4}n(4\sqrt{6}-2\sqrt{14}+3(4\sqrt{5}+2\sqrt{6}+\sqrt{14})n))");
  b.add(F, "ga", 12 * (3 + 2 * s(2)) * n * n, "Theorem 2.3", R"(12(3+2\sqrt{2})n^{2})");
  b.add(F, "ga", q(4, 3) * n * ((9 + 6 * s(2)) * n + 2 * s(2) - 3), "Theorem 2.3 (proof)",
        R"(\frac{4}{3}n((9+6\sqrt{2})n+2\sqrt{2}-3))", Provenance::ProofLine);

  const ClosedForm m1 = n - 1;
  b.add(F, "abc4",
        (q(1, 440) * (264 * s(29) + 88 * s(930) + 24 * s(2255) + 5280 * m1 + 60 * s(330) * m1 * n +
                      24 * s(3410) * m1 + 165 * s(94) * m1 * m1 + 528 * s(35) * n + 132 * s(38) * n +
                      330 * s(46) * m1 * n + 60 * s(86) * (-3 + 2 * n) + 220 * s(35) * (2 - 5 * n + 3 * n * n)))
            .with_min_n(2),
        "Theorem 2.3",
        R"q(\frac{1}{440}(264\sqrt{29}+88\sqrt{930}+24\sqrt{2255}+5280(-1+n)+
	60\sqrt{330}(-1+n)n+24\sqrt{3410}(-1+n)+165\sqrt{94}(-1+n)^{2}+528\sqrt{35}n+132\sqrt{38}n+330\sqrt{46}(-1+n)n+60\sqrt{86}(-3+2n)+220\sqrt{35}(2-5n+3n^{2})))q");
  b.add(F, "ga5",
        (8 * s(2) + 6 * s(15) + q(8, 7) * s(110) + q(48, 23) * s(33) * m1 + q(3, 2) * s(55) * m1 +
         q(96, 17) * s(66) * m1 - 36 * n + q(48, 11) * s(30) * n + 36 * n * n + 8 * s(2) * (2 - 5 * n + 3 * n * n))
            .with_min_n(2),
        "Theorem 2.3",
        R"q(8\sqrt{2}+6\sqrt{15}+\frac{8}{7}\sqrt{110}+\frac{48}{23}\sqrt{33}(-1+n)+\frac{3}{2}\sqrt{55}(-1+n)+\frac{96}{17}\sqrt{66}(-1+n)-36n+\frac{48}{11}\sqrt{30}n+36n^{2}+8\sqrt{2}(2-5n+3n^{2}))q");

  b.add(F, "vertices", 27 * n * n - 21 * n, "Theorem 2.1 (proof)", "$27n^2-21n$ vertices", Provenance::Prose);
  b.add(F, "edges", 72 * n * n, "Table 1 (row sum)",
        "Edge partition of Planar Octahedron network $POH(n)$ based on degrees of end vertices of each edge.",
        Provenance::Prose);

  const std::string t1 = "Table 1";
  b.row(F, Basis::Degree, 4, 4, 18 * n * n + 12 * n, t1, "18n^{2}+12n");
  b.row(F, Basis::Degree, 4, 8, 36 * n * n, t1, "36n^2");
  b.row(F, Basis::Degree, 8, 8, 18 * n * n - 12 * n, t1, "18n^2-12n");

  const std::string t2 = "Table 2";
  auto row2 = [&](long a, long c, const ClosedForm& cf, const std::string& cell) {
    b.row(F, Basis::DegreeSum, a, c, cf.with_min_n(2), t2, cell);
  };
  row2(20, 20, 6 * n, "6n");
  row2(20, 24, 24 * n, "24n");
  row2(20, 40, 12, "12");
  row2(20, 44, 12 * n - 12, "12n-12");
  row2(24, 24, 18 * n * n - 18 * n, "18n^{2}-18n");
  row2(24, 40, 24, "24");
  row2(24, 44, 48 * n - 48, "48n-48");
  row2(24, 48, 36 * n * n - 60 * n + 24, "36n^{^{2}}-60n+24");
  row2(40, 44, 12, "12");
  row2(44, 44, 12 * n - 18, "12n-18");
  row2(44, 48, 12 * n - 12, "12n-12");
  row2(48, 48, 18 * n * n - 36 * n + 18, "18n^{2}-36n+18");
}

void add_tp(Builder& b) {
  const ClosedForm n = ClosedForm::n();
  const Family F = Family::TP;

  b.add(F, "randic1", 54 * n * (-5 + 21 * n), "Theorem 2.4", "54n(-5+21n)");
  b.add(F, "randic1/2", 18 * n * (-3 + s(2) + 3 * (3 + s(2)) * n), "Theorem 2.4",
        R"(18n(-3+\sqrt{2}+3(3+\sqrt{2})n))");
  b.add(F, "randic-1", q(1, 6) * n * (4 + 21 * n), "Theorem 2.4", R"(\frac{1}{6}n(4+21n))");
  b.add(F, "randic-1/2", n * (s(2) + 3 * (3 + s(2)) * n), "Theorem 2.4", R"(n(\sqrt{2}+3(3+\sqrt{2})n))");
  b.add(F, "zagreb1", 54 * n * (-1 + 9 * n), "Theorem 2.5", "M_{1}(TP(n))=54n(-1+9n)");
  b.add(F, "abc", n * (4 - 2 * s(10) + s(14) + 3 * (4 + s(10) + s(14)) * n), "Theorem 2.6",
        R"(n(4-2\sqrt{10}+\sqrt{14}+3(4+\sqrt{10}+\sqrt{14})n))");
  b.add(F, "ga", 2 * n * (-3 + 2 * s(2) + 6 * (3 + s(2)) * n), "Theorem 2.6", R"(2n(-3+2\sqrt{2}+6(3+\sqrt{2})n))");

  b.add(F, "abc4",
        (4 - q(1, 3) * s(2) - q(4, 3) * s(13) + sq(74, 5) + s(17) - q(5, 3) * s(22) - q(4, 3) * s(37) +
         q(3, 5) * s(58) +
         q(2, 45) * (-225 + 60 * s(2) + 20 * s(13) + 15 * s(22) + 30 * s(37) + 15 * s(57) - 27 * s(58) + 3 * s(330)) *
             n +
         (6 + 3 * sq(11, 2) + q(3, 5) * s(58)) * n * n)
            .with_min_n(2),
        "Theorem 2.6",
        R"q(4-\frac{\sqrt{2}}{3}-\frac{4\sqrt{13}}{3}+\sqrt{\frac{74}{5}}+\sqrt{17}-\frac{5\sqrt{22}}{3}-\frac{4\sqrt{37}}{3}+\frac{3\sqrt{58}}{5}+\\  \frac{2}{45}(-225+60\sqrt{2}+20\sqrt{13}+15\sqrt{22}+30\sqrt{37}+15\sqrt{57}-\\ 27\sqrt{58}+3\sqrt{330})n+[6+3\sqrt{\frac{11}{2}}+\frac{3\sqrt{58}}{5}]n^{2})q");
  b.add(F, "ga5",
        (q(-444, 13) + q(280, 17) * s(2) - q(36, 7) * s(5) + q(5760, 1729) * s(10) +
         (q(-24, 13) + q(48, 7) * s(3) + q(36, 7) * s(5) - q(636, 133) * s(10) + q(3, 2) * s(15)) * n +
         q(36, 7) * (7 + s(10)) * n * n)
            .with_min_n(2),
        "Theorem 2.6",
        R"q(-\frac{444}{13}+\frac{280\sqrt{2}}{17}-\frac{36\sqrt{5}}{7}+\frac{5760\sqrt{10}}{1729}+[-\frac{24}{13}+\frac{48\sqrt{3}}{7}+\frac{36\sqrt{5}}{7}-\\ \frac{636\sqrt{10}}{133}+\frac{3\sqrt{15}}{2}]n+\frac{36}{7}(7+\sqrt{10})n^{2})q");

  b.add(F, "vertices", 27 * n * n + 3 * n, "Theorem 2.4 (proof)", "$27n^2+3n$ vertices", Provenance::Prose);
  b.add(F, "edges", 54 * n * n, "Table 3 (row sum)",
        "Edge partition of Triangular Prism network $TP(n)$ based on degrees of end vertices of each edge.",
        Provenance::Prose);

  const std::string t3 = "Table 3";
  b.row(F, Basis::Degree, 3, 3, 18 * n * n + 6 * n, t3, "18n^{2}+6n");
  b.row(F, Basis::Degree, 3, 6, 18 * n * n + 6 * n, t3, "18n^2+6n");
  b.row(F, Basis::Degree, 6, 6, 18 * n * n - 12 * n, t3, "18n^2-12n");

  const std::string t4 = "Table 4";
  auto row4 = [&](long a, long c, const ClosedForm& cf, const std::string& cell,
                  Provenance p = Provenance::TheoremStatement) {
    b.row(F, Basis::DegreeSum, a, c, cf.with_min_n(2), t4, cell, p);
  };
  row4(9, 12, 12 * n, "12n");
  row4(9, 15, 6 * n, "6n");
  row4(12, 12, 8 * n * n - 12, "8n^{2}-12");
  b.add(F, "degsum(12,12)", (18 * n * n - 12).with_min_n(2), "Theorem 2.6 (proof)",
        "$E_6(TP(n))$ contains $18n^{2}-12$ edges $uv$ with $S_u=S_v=12$", Provenance::Prose);
  row4(12, 12, 18 * n * n - 12 * n, "8n^{2}-12", Provenance::Corrected);
  row4(12, 24, 12, "12");
  row4(12, 27, 24 * n - 24, "24n-24");
  row4(12, 30, 18 * n * n - 30 * n + 12, "18n^2-30n+12");
  row4(15, 24, 12, "12");
  row4(15, 27, 12 * n - 12, "12n-12");
  row4(24, 27, 12, "12");
  row4(27, 27, 12 * n - 18, "12n-18");
  row4(27, 30, 12 * n - 12, "12n-12");
  row4(30, 30, 18 * n * n - 36 * n + 18, "18n^2-36n+18");
}

void add_dpoh(Builder& b) {
  const ClosedForm n = ClosedForm::n();
  const Family F = Family::DPOH;

  b.add(F, "randic1", 288 * (11 - 31 * n + 27 * n * n), "Theorem 2.7", "288(11-31n+27n^{2})");
  b.add(F, "randic1/2", 24 * (11 + 6 * s(2) - (31 + 18 * s(2)) * n + 9 * (3 + 2 * s(2)) * n * n), "Theorem 2.7",
        R"(24(11+6\sqrt{2}-(31+18\sqrt{2})n+9(3+2\sqrt{2})n^{2}))");
  b.add(F, "randic-1", q(9, 32) * (7 - 23 * n + 27 * n * n), "Theorem 2.7", R"(\frac{9}{32}(7-23n+27n^{2}))");
  b.add(F, "randic-1/2", q(3, 4) * (7 + 6 * s(2) - (23 + 18 * s(2)) * n + 9 * (3 + 2 * s(2)) * n * n),
        "Theorem 2.7", R"(\frac{3}{4}(7+6\sqrt{2}-(23+18\sqrt{2})n+9(3+2\sqrt{2})n^{2}))");
  b.add(F, "zagreb1", 96 * (10 - 29 + 27 * n * n), "Theorem 2.8", "M_{1}(DPOH(n))=96(10-29+27n^{2})");
  b.add(F, "zagreb1", 96 * (27 * n * n - 29 * n + 10), "Theorem 2.8", "M_{1}(DPOH(n))=96(10-29+27n^{2})",
        Provenance::Corrected);
  b.add(F, "abc",
        q(1, 8) * (72 * s(5) * (1 - 3 * n + 3 * n * n) + 6 * s(14) * (5 - 13 * n + 9 * n * n) +
                   12 * s(6) * (1 - 5 * n + 9 * n * n)),
        "Theorem 2.9",
        R"(\frac{1}{8}(72\sqrt{5}(1-3n+3n^{2})+6\sqrt{14}(5-13n+9n^{2})+12\sqrt{6}(1-5n+9n^{2})))");
  b.add(F, "ga", 12 * (3 + 2 * s(2)) * (1 - 3 * n + 3 * n * n), "Theorem 2.9", R"(12(3+2\sqrt{2})(1-3n+3n^{2}))");

  const ClosedForm m1 = n - 1;
  b.add(F, "abc4",
        (q(1, 440) * (66 * s(78) + 5280 * m1 + 120 * s(330) * m1 + 24 * s(3410) * m1 + 264 * s(29) * n +
                      88 * s(930) * n + 528 * s(35) * (-1 + 2 * n) + 132 * s(38) * (-1 + 2 * n) +
                      330 * s(46) * (2 - 5 * n + 3 * n * n) + 55 * s(94) * (10 - 19 * n + 9 * n * n) +
                      220 * s(35) * (8 - 17 * n + 9 * n * n)))
            .with_min_n(3),
        "Theorem 2.9",
        R"q(\frac{1}{440}(66\sqrt{78}+5280(-1+n)+120\sqrt{330}(-1+n)+\\ 24\sqrt{3410}(-1+n)+264\sqrt{29}n+88\sqrt{930}n+\\ 528\sqrt{35}(-1+2n)+132\sqrt{38}(-1+2n)+\\ 330\sqrt{46}(2-5n+3n^{2})+55\sqrt{94}(10-19n+9n^{2})+\\ 220\sqrt{35}(8-17n+9n^{2})))q");
  b.add(F, "ga5",
        (96 + q(96, 23) * s(33) * m1 + q(3, 2) * s(55) * m1 + q(96, 17) * s(66) * m1 + q(8, 7) * s(110) * m1 -
         192 * n + 8 * s(2) * n + 108 * n * n + q(48, 11) * s(30) * (-1 + 2 * n) +
         8 * s(2) * (8 - 17 * n + 9 * n * n))
            .with_min_n(3),
        "Theorem 2.9",
        R"q(96+\frac{96}{23}\sqrt{33}(-1+n)+\frac{3}{2}\sqrt{55}(-1+n)+\frac{96}{17}\sqrt{66}(-1+n)+\\ \frac{8}{7}\sqrt{110}(-1+n)-192n+8\sqrt{2}n+108n^{2}+\ \frac{48}{11}\sqrt{30}(-1+2n)+8\sqrt{2}(8-17n+9n^{2}))q");

  b.add(F, "vertices", 6561 - 75 * n + 24, "Theorem 2.7 (proof)", "$81^{2}-75n+24$ vertices", Provenance::Prose);
  b.add(F, "vertices", 81 * n * n - 75 * n + 24, "Theorem 2.7 (proof)", "$81^{2}-75n+24$ vertices",
        Provenance::Corrected);
  b.add(F, "edges", ClosedForm(46656 - 216 + 72), "Theorem 2.7 (proof)",
        "the edges of $DPOH(n)$ has $216^{2}-216+72$", Provenance::Prose);
  b.add(F, "edges", 216 * n * n - 216 * n + 72, "Theorem 2.7 (proof)", "the edges of $DPOH(n)$ has $216^{2}-216+72$",
        Provenance::Corrected);

  const std::string t5 = "Table 5";
  b.row(F, Basis::Degree, 4, 4, 54 * n * n - 30 * n + 6, t5, "54n^{2}-30n+6");
  b.row(F, Basis::Degree, 4, 8, 108 * n * n - 108 * n + 36, t5, "108n^2-108n+36");
  b.row(F, Basis::Degree, 8, 8, 54 * n * n - 78 * n + 30, t5, "54n^2-78n+30");

  const std::string t6 = "Table 6";
  auto row6 = [&](long a, long c, const ClosedForm& cf, const std::string& cell) {
    b.row(F, Basis::DegreeSum, a, c, cf.with_min_n(3), t6, cell);
  };
  row6(20, 20, 12 * n - 6, "12n-6");
  row6(20, 24, 48 * n - 24, "48n-24");
  row6(20, 40, 12 * n, "12n");
  row6(20, 44, 12 * n - 12, "12n-12");
  row6(24, 24, 54 * n * n - 90 + 36 * n, "54n^{2}-90+36n");
  b.add(F, "degsum(24,24)", (54 * n * n - 90 * n + 36).with_min_n(3), "Theorem 2.9 (proof)",
        "$E_8(DPOH(n))$ contains $54n^{2}-90n+36$ edges $uv$ with $S_u=24$ and $S_v=24$", Provenance::Prose);
  row6(24, 40, 24 * n, "24n");
  row6(24, 44, 48 * n - 48, "48n-48");
  row6(24, 48, 108 * n * n - 204 * n + 96, "108n^{^{2}}-204n+96");
  row6(40, 40, 6, "6");
  row6(40, 44, 12 * n - 12, "12n-12");
  row6(44, 48, 24 * n - 24, "24n-24");
  row6(48, 48, 54 * n * n - 114 * n + 60, "54n^{2}-114n+60");
}

std::vector<ClaimRecord> build_registry() {
  std::vector<ClaimRecord> out;
  Builder b(out);
  add_poh(b);
  add_tp(b);
  add_dpoh(b);
  return out;
}

}  // namespace

const std::vector<ClaimRecord>& registry() {
  static const std::vector<ClaimRecord> claims = build_registry();
  return claims;
}

const ClaimRecord* lookup(Family family, const std::string& quantity, Provenance provenance) {
  for (const auto& c : registry()) {
    if (c.family == family && c.quantity == quantity && c.provenance == provenance) return &c;
  }
  return nullptr;
}

std::size_t registry_position(const ClaimRecord& claim) {
  const auto& all = registry();
  if (&claim >= all.data() && &claim < all.data() + all.size()) return static_cast<std::size_t>(&claim - all.data());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].family == claim.family && all[i].quantity == claim.quantity && all[i].provenance == claim.provenance) {
      return i;
    }
  }
  return all.size();
}

std::string claims_json() {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& c : registry()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& [value, power] : c.claimed.coefficients()) {
      coeffs.push_back({{"power", power}, {"coefficient", value.str()}});
    }
    doc.push_back({{"family", family_name(c.family)},
                   {"quantity", c.quantity},
                   {"provenance", provenance_name(c.provenance)},
                   {"claimed", c.claimed.str()},
                   {"coefficients", coeffs},
                   {"min_n", c.claimed.min_n()},
                   {"citation", {{"source", c.citation.source}, {"quote", c.citation.quote}}}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace octanet
