#include "doctest.h"

#include "octanet/generators.hpp"
#include "octanet/indices.hpp"
#include "octanet/verify.hpp"

#include "json.hpp"

#include <cstdlib>
#include <set>

using namespace octanet;

namespace {

RadicalValue r(long a, long b = 1) { return RadicalValue(Rational(a, b)); }
RadicalValue sq(long k) { return RadicalValue::sqrt(k); }

const std::vector<Family> kFamilies = {Family::POH, Family::TP, Family::DPOH};

ClaimFilter only(const std::string& quantity, Provenance p = Provenance::TheoremStatement) {
  return [quantity, p](const ClaimRecord& c) { return c.quantity == quantity && c.provenance == p; };
}

const std::vector<ComparisonResult>& full_sweep() {
  static const std::vector<ComparisonResult> results = verify(kFamilies, {1, 5});
  return results;
}

std::set<std::string> mismatched_claims() {
  std::set<std::string> out;
  for (const auto& r : full_sweep()) {
    if (r.status == Status::Mismatch) {
      out.insert(family_name(r.claim->family) + " " + r.claim->quantity + " " + provenance_name(r.claim->provenance));
    }
  }
  return out;
}

struct ThreadsEnv {
  explicit ThreadsEnv(const char* value) { setenv("OCTANET_THREADS", value, 1); }
  ~ThreadsEnv() { unsetenv("OCTANET_THREADS"); }
};

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("POH first Zagreb index matches for n = 1..5") {
    const auto results = verify_family(Family::POH, {1, 5}, only("zagreb1"));
    REQUIRE(results.size() == 5);
    for (const auto& res : results) {
      CHECK(res.status == Status::ExactMatch);
      CHECK(res.computed == r(96L * res.n * (9 * res.n - 1)));
      CHECK(res.residual == "0.000000000000");
    }
  }

  TEST_CASE("POH vertex count prose is refuted") {
    const auto results = verify_family(Family::POH, {2, 2}, only("vertices", Provenance::Prose));
    REQUIRE(results.size() == 1);
    CHECK(results[0].status == Status::Mismatch);
    CHECK(results[0].computed == r(114));
    CHECK(results[0].claimed == r(66));
    CHECK(results[0].residual == "48.000000000000");
  }

  TEST_CASE("POH GA proof line disagrees with the statement") {
    const auto proof = verify_family(Family::POH, {1, 1}, only("ga", Provenance::ProofLine));
    REQUIRE(proof.size() == 1);
    CHECK(proof[0].status == Status::Mismatch);
    CHECK(proof[0].computed == 36 + 24 * sq(2));
    CHECK(proof[0].claimed == 8 + r(32, 3) * sq(2));
    const auto statement = verify_family(Family::POH, {1, 1}, only("ga"));
    CHECK(statement.at(0).status == Status::ExactMatch);
  }

  TEST_CASE("known-consistent claims all match") {
    std::size_t checked = 0;
    for (const auto& res : full_sweep()) {
      if (!is_known_consistent(*res.claim)) continue;
      INFO(family_name(res.claim->family) << " " << res.claim->quantity << " n=" << res.n);
      CHECK(res.status == Status::ExactMatch);
      ++checked;
    }
    CHECK(checked == 5 * 35);
  }

  TEST_CASE("refuted claims are flagged") {
    const std::set<std::string> expected = {
        "POH ga proof-line",
        "POH abc4 theorem-statement",
        "POH vertices prose",
        "TP abc4 theorem-statement",
        "TP ga5 theorem-statement",
        "TP degsum(12,12) theorem-statement",
        "TP degsum(12,12) prose",
        "DPOH zagreb1 theorem-statement",
        "DPOH abc4 theorem-statement",
        "DPOH ga5 theorem-statement",
        "DPOH vertices prose",
        "DPOH edges prose",
        "DPOH degsum(24,24) theorem-statement",
    };
    CHECK(mismatched_claims() == expected);
  }

  TEST_CASE("degree-sum claims that hold") {
    for (const auto& res : full_sweep()) {
      const auto& c = *res.claim;
      const bool holds = (c.family == Family::POH && c.quantity == "ga5") ||
                         (c.family == Family::TP && c.quantity == "degsum(12,12)" &&
                          c.provenance == Provenance::Corrected) ||
                         (c.family == Family::DPOH && c.quantity == "degsum(24,24)" &&
                          c.provenance == Provenance::Prose);
      if (holds && res.status != Status::BelowValidity) CHECK(res.status == Status::ExactMatch);
    }
  }

  TEST_CASE("result count and validity floors") {
    const Summary s = summarize(full_sweep());
    CHECK(s.total() == registry().size() * 5);
    CHECK(s.exact_match + s.mismatch + s.below_validity == full_sweep().size());
    for (const auto& res : full_sweep()) {
      const bool below = res.n < res.claim->claimed.min_n();
      CHECK((res.status == Status::BelowValidity) == below);
      if (below) {
        CHECK(res.residual.empty());
        CHECK(res.claimed.is_zero());
      } else {
        CHECK(res.claimed == res.claim->claimed.evaluate(res.n));
        CHECK((res.status == Status::ExactMatch) == (res.computed == res.claimed));
      }
    }
  }

  TEST_CASE("computed values agree with direct measurement") {
    for (const auto& res : full_sweep()) {
      if (res.n != 3) continue;
      const Network g = generate(res.claim->family, res.n);
      CHECK(res.computed == measure(g, res.claim->quantity));
    }
  }

  TEST_CASE("results are ordered by family, registry position and n") {
    const auto& all = full_sweep();
    for (std::size_t i = 1; i < all.size(); ++i) {
      const auto a = std::make_tuple(all[i - 1].claim->family, registry_position(*all[i - 1].claim), all[i - 1].n);
      const auto b = std::make_tuple(all[i].claim->family, registry_position(*all[i].claim), all[i].n);
      CHECK(a < b);
    }
  }

  TEST_CASE("thread count does not change the report") {
    const ReportMeta meta{kFamilies, {1, 4}};
    std::string one;
    std::string four;
    {
      ThreadsEnv env("1");
      CHECK(worker_count() == 1);
      one = emit_report(verify(kFamilies, {1, 4}), meta, ReportFormat::Json);
    }
    {
      ThreadsEnv env("4");
      CHECK(worker_count() == 4);
      four = emit_report(verify(kFamilies, {1, 4}), meta, ReportFormat::Json);
    }
    CHECK(one == four);
    ThreadsEnv bad("zero");
    CHECK(worker_count() >= 1);
  }

  TEST_CASE("json report") {
    const auto results = verify_family(Family::POH, {1, 2});
    const auto doc = nlohmann::json::parse(emit_report(results, {{Family::POH}, {1, 2}}, ReportFormat::Json));
    CHECK(doc.at("meta").at("families") == nlohmann::json::array({"POH"}));
    CHECK(doc.at("meta").at("n_range") == nlohmann::json::array({1, 2}));
    CHECK(doc.at("meta").at("tool_version") == "0.1.0");
    CHECK(doc.at("results").size() == results.size());
    const Summary s = summarize(results);
    CHECK(doc.at("summary").at("total") == s.total());
    CHECK(doc.at("summary").at("Mismatch") == s.mismatch);
    for (const auto& row : doc.at("results")) {
      if (row.at("status") == "BelowValidity") CHECK(row.at("claimed").is_null());
      CHECK(row.contains("quote") == (row.at("status") == "Mismatch"));
    }
  }

  TEST_CASE("empty results still produce a summary") {
    const auto doc = nlohmann::json::parse(emit_report({}, {{}, {1, 1}}, ReportFormat::Json));
    CHECK(doc.at("results").empty());
    CHECK(doc.at("summary").at("ExactMatch") == 0);
    CHECK(doc.at("summary").at("Mismatch") == 0);
    CHECK(doc.at("summary").at("BelowValidity") == 0);
    CHECK(doc.at("summary").at("total") == 0);
    const std::string md = emit_report({}, {{}, {1, 1}}, ReportFormat::Markdown);
    CHECK(md.find("| total | 0 |") != std::string::npos);
    CHECK(emit_report({}, {{}, {1, 1}}, ReportFormat::Csv) ==
          "family,quantity,provenance,source,n,status,computed,claimed,residual,quote\n");
  }

  TEST_CASE("markdown and csv reports") {
    const auto results = verify_family(Family::POH, {1, 2});
    const ReportMeta meta{{Family::POH}, {1, 2}};
    const std::string md = emit_report(results, meta, ReportFormat::Markdown);
    CHECK(md.rfind("# Verification report", 0) == 0);
    CHECK(md.find("## POH") != std::string::npos);
    CHECK(md.find("### zagreb1 (theorem-statement, Theorem 2.2)") != std::string::npos);
    CHECK(md.find("✗") != std::string::npos);
    CHECK(md.find("✓") != std::string::npos);
    const std::string csv = emit_report(results, meta, ReportFormat::Csv);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) >= results.size() + 1);
    CHECK(csv.find("POH,zagreb1,theorem-statement,Theorem 2.2,1,ExactMatch,768,768,0.000000000000,\n") !=
          std::string::npos);
  }

  TEST_CASE("report formats") {
    CHECK(parse_report_format("json") == ReportFormat::Json);
    CHECK(parse_report_format("md") == ReportFormat::Markdown);
    CHECK(parse_report_format("markdown") == ReportFormat::Markdown);
    CHECK(parse_report_format("csv") == ReportFormat::Csv);
    CHECK_THROWS_AS(parse_report_format("xml"), UnsupportedFormat);
  }

  TEST_CASE("plot series") {
    const PlotSeries tp = plot_data(Family::TP, "zagreb1", {1, 5});
    CHECK(tp.columns == std::vector<std::string>{"n", "computed", "claimed:theorem-statement"});
    const std::vector<std::string> values = {"432", "1836", "4212", "7560", "11880"};
    REQUIRE(tp.rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(tp.rows[i][0] == std::to_string(i + 1));
      CHECK(tp.rows[i][1] == values[i] + ".000000000000");
      CHECK(tp.rows[i][2] == tp.rows[i][1]);
    }
    const PlotSeries dpoh = plot_data(Family::DPOH, "zagreb1", {1, 3});
    CHECK(dpoh.columns.size() == 4);
    CHECK(dpoh.rows[0][1] == "768.000000000000");
    CHECK(dpoh.rows[1][1] == "5760.000000000000");
    CHECK(dpoh.rows[2][1] == "15936.000000000000");
    CHECK(dpoh.rows[2][3] == dpoh.rows[2][1]);
    CHECK(dpoh.rows[2][2] != dpoh.rows[2][1]);
    // The printed form coincides with the graph at n = 1 only.
    CHECK(dpoh.rows[0][2] == dpoh.rows[0][1]);
    CHECK(dpoh.rows[1][2] != dpoh.rows[1][1]);
    const PlotSeries ga5 = plot_data(Family::POH, "ga5", {1, 2});
    CHECK(ga5.rows[0][2].empty());
    CHECK_FALSE(ga5.rows[1][2].empty());
    CHECK(to_csv(ga5).rfind("n,computed,claimed:theorem-statement\n1,", 0) == 0);
    CHECK_THROWS_AS(plot_data(Family::POH, "wiener", {1, 2}), UnknownIndexError);
  }

  TEST_CASE("dimension ranges") {
    CHECK(parse_n_range("5") == NRange{5, 5});
    CHECK(parse_n_range("1..5") == NRange{1, 5});
    CHECK(parse_n_range("12..40") == NRange{12, 40});
    for (const char* bad : {"", "0", "1..", "..3", "5..1", "a", "1...3", "-2", "1..0"}) {
      INFO(bad);
      CHECK_THROWS_AS(parse_n_range(bad), std::invalid_argument);
    }
    CHECK_THROWS_AS(verify({Family::Custom}, {1, 1}), std::invalid_argument);
  }
}
