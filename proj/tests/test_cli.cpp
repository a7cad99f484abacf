#include "doctest.h"

#include "octanet/cli.hpp"
#include "octanet/closed_forms.hpp"
#include "octanet/generators.hpp"
#include "octanet/graph_io.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

using namespace octanet;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Flags declared in the option table, one per line.
std::set<std::string> long_flags(const std::string& help) {
  std::set<std::string> out;
  static const std::regex flag(R"(^  (?:-[a-z],)?(--[a-z][a-z-]*))");
  std::istringstream lines(help);
  std::smatch m;
  for (std::string line; std::getline(lines, line);) {
    if (std::regex_search(line, m, flag)) out.insert(m[1]);
  }
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("octanet_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help lists families and indices") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Families: poh, tp, dpoh") != std::string::npos);
    CHECK(r.out.find("wiener") != std::string::npos);
    for (const char* sub : {"generate", "partition", "index", "verify", "plot-data", "claims"}) {
      CHECK(r.out.find(sub) != std::string::npos);
    }
    CHECK(run({"--version"}).out.find("0.1.0") != std::string::npos);
  }

  TEST_CASE("subcommand help shows exactly the documented flags") {
    const std::map<std::string, std::set<std::string>> expected = {
        {"generate", {"--help", "--family", "--n", "--format", "--orientation", "--out"}},
        {"partition", {"--help", "--family", "--n", "--basis", "--out"}},
        {"index", {"--help", "--family", "--n", "--graph", "--index", "--expr", "--basis", "--approx", "--out"}},
        {"verify", {"--help", "--family", "--n", "--format", "--strict", "--out"}},
        {"plot-data", {"--help", "--family", "--index", "--n", "--out"}},
        {"claims", {"--help", "--out"}},
    };
    for (const auto& [sub, flags] : expected) {
      const Run r = run({sub, "--help"});
      INFO(sub << "\n" << r.out);
      CHECK(r.code == 0);
      CHECK(long_flags(r.out) == flags);
    }
    const Run idx = run({"index", "--help"});
    for (const char* name : {"randic1", "zagreb1", "abc4", "ga5", "wiener"}) CHECK(idx.out.find(name) != std::string::npos);
    CHECK(run({"generate", "--help"}).out.find("poh, tp, dpoh") != std::string::npos);
  }

  TEST_CASE("bad flags exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    const Run zero = run({"generate", "--family", "poh", "--n", "0"});
    CHECK(zero.code == 2);
    CHECK(zero.err.find("--n") != std::string::npos);
    CHECK(run({"generate", "--family", "cube", "--n", "2"}).code == 2);
    CHECK(run({"generate", "--family", "poh", "--n", "2", "--format", "svg"}).code == 2);
    CHECK(run({"generate", "--family", "poh", "--n", "2", "--orientation", "reverse"}).code == 2);
    CHECK(run({"partition", "--family", "poh", "--n", "2", "--basis", "weight"}).code == 2);
    CHECK(run({"index", "--family", "poh", "--n", "1", "--index", "hyper"}).code == 2);
    CHECK(run({"index", "--family", "poh", "--n", "1"}).code == 2);
    CHECK(run({"index", "--family", "poh", "--index", "abc"}).code == 2);
    CHECK(run({"index", "--family", "poh", "--n", "1", "--index", "abc", "--approx", "0"}).code == 2);
    CHECK(run({"verify", "--family", "poh", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "--family", "poh", "--n", "3..1"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"plot-data", "--family", "poh", "--index", "wiener"}).code == 2);
  }

  TEST_CASE("expression errors exit with 2 and name the position") {
    const Run r = run({"index", "--family", "poh", "--n", "1", "--expr", "du +"});
    CHECK(r.code == 2);
    CHECK(r.err.find("offset 4") != std::string::npos);
    const Run asym = run({"index", "--family", "poh", "--n", "1", "--expr", "du"});
    CHECK(asym.code == 2);
    CHECK(asym.err.find("(4,8)") != std::string::npos);
    CHECK(run({"index", "--family", "poh", "--n", "1", "--expr", "du+Sv"}).code == 2);
    CHECK(run({"index", "--family", "poh", "--n", "1", "--expr", "sqrt(du-dv-9)"}).code == 2);
  }

  TEST_CASE("generate") {
    const Run json = run({"generate", "--family", "poh", "--n", "1"});
    CHECK(json.code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc.at("family") == "POH");
    CHECK(doc.at("vertices").size() == 30);
    CHECK(doc.at("edges").size() == 72);
    CHECK(lines(run({"generate", "--family", "tp", "--n", "1", "--format", "edgelist"}).out) == 54);
    const Run dot = run({"generate", "--family", "POH", "--n", "2", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(lines(dot.out) == 114 + 288 + 3);
    const Run fwd = run({"generate", "--family", "tp", "--n", "2", "--format", "edgelist"});
    const Run rev = run({"generate", "--family", "tp", "--n", "2", "--format", "edgelist", "--orientation", "reverse"});
    CHECK(rev.code == 0);
    CHECK(fwd.out != rev.out);
    CHECK(lines(fwd.out) == lines(rev.out));
  }

  TEST_CASE("partition") {
    const Run r = run({"partition", "--family", "poh", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "\"(a,b)\",count\n\"(4,4)\",96\n\"(4,8)\",144\n\"(8,8)\",48\n");
    const Run d = run({"partition", "--family", "dpoh", "--n", "2"});
    CHECK(d.out == "\"(a,b)\",count\n\"(4,4)\",162\n\"(4,8)\",252\n\"(8,8)\",90\n");
    const Run s = run({"partition", "--family", "tp", "--n", "2", "--basis", "degsum"});
    CHECK(lines(s.out) == 13);
    CHECK(s.out.find("\"(9,12)\",24\n") != std::string::npos);
  }

  TEST_CASE("index") {
    const Run abc = run({"index", "--family", "poh", "--n", "1", "--index", "abc"});
    CHECK(abc.code == 0);
    CHECK(abc.out == "index,value\nabc,9*sqrt(5) + 15/2*sqrt(6) + 3/4*sqrt(14)\n");
    const Run multi = run({"index", "--family", "tp", "--n", "1", "--index", "randic1", "--index", "wiener"});
    CHECK(multi.out.find("randic1,864\n") != std::string::npos);
    CHECK(run({"index", "--family", "poh", "--n", "1", "--index", "wiener"}).out == "index,value\nwiener,1167\n");
    const Run approx = run({"index", "--family", "poh", "--n", "1", "--index", "ga", "--approx", "6"});
    CHECK(approx.out == "index,value,approx\nga,36 + 24*sqrt(2),69.941125\n");
    const Run expr = run({"index", "--family", "poh", "--n", "2", "--expr", "du+dv"});
    CHECK(expr.code == 0);
    CHECK(expr.out == "index,value\ndu + dv,3264\n");
    const Run sums = run({"index", "--family", "poh", "--n", "2", "--expr", "2*sqrt(Su*Sv)/(Su+Sv)"});
    const Run ga5 = run({"index", "--family", "poh", "--n", "2", "--index", "ga5"});
    CHECK(sums.out.substr(sums.out.rfind(',')) == ga5.out.substr(ga5.out.rfind(',')));
  }

  TEST_CASE("graph files round trip through --out and --graph") {
    const auto path = temp_path("poh2.json");
    CHECK(run({"generate", "--family", "poh", "--n", "2", "--out", path.string()}).code == 0);
    CHECK(slurp(path) == to_json(generate_poh(2)));
    const Run from_file = run({"index", "--graph", path.string(), "--index", "zagreb1", "--index", "ga"});
    const Run direct = run({"index", "--family", "poh", "--n", "2", "--index", "zagreb1", "--index", "ga"});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == direct.out);
    std::filesystem::remove(path);
    CHECK(run({"index", "--graph", path.string(), "--index", "ga"}).code == 2);
    const auto bad = temp_path("bad.json");
    std::ofstream(bad) << "{\"vertices\": 3}";
    CHECK(run({"index", "--graph", bad.string(), "--index", "ga"}).code == 2);
    std::filesystem::remove(bad);
    CHECK(run({"claims", "--out", "/nonexistent-dir/x.json"}).code == 2);
  }

  TEST_CASE("verify") {
    const Run strict = run({"verify", "--family", "all", "--n", "1..3", "--strict", "--format", "json"});
    CHECK(strict.code == 0);
    const auto doc = nlohmann::json::parse(strict.out);
    CHECK(doc.at("summary").at("total") == registry().size() * 3);
    CHECK(doc.at("meta").at("families") == nlohmann::json::array({"POH", "TP", "DPOH"}));
    const Run md = run({"verify", "--family", "tp", "--family", "poh", "--n", "2"});
    CHECK(md.code == 0);
    CHECK(md.out.rfind("# Verification report", 0) == 0);
    CHECK(md.out.find("## POH") < md.out.find("## TP"));
    const Run csv = run({"verify", "--family", "dpoh", "--n", "2", "--format", "csv"});
    CHECK(csv.out.rfind("family,quantity,provenance,source,n,status", 0) == 0);
  }

  TEST_CASE("plot-data and claims") {
    const Run plot = run({"plot-data", "--family", "tp", "--index", "zagreb1", "--n", "1..5"});
    CHECK(plot.code == 0);
    CHECK(lines(plot.out) == 6);
    CHECK(plot.out.find("\n5,11880.000000000000,11880.000000000000\n") != std::string::npos);
    const Run claims = run({"claims"});
    CHECK(nlohmann::json::parse(claims.out).size() == registry().size());
  }

  TEST_CASE("repeated runs are byte identical") {
    const std::vector<std::vector<std::string>> cases = {
        {"generate", "--family", "dpoh", "--n", "3"},
        {"partition", "--family", "tp", "--n", "3", "--basis", "degsum"},
        {"index", "--family", "dpoh", "--n", "2", "--index", "abc4", "--approx", "20"},
        {"verify", "--family", "all", "--n", "1..3", "--format", "json"},
        {"plot-data", "--family", "poh", "--index", "ga5", "--n", "1..4"},
    };
    for (const auto& args : cases) {
      const Run a = run(args);
      const Run b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }
}
