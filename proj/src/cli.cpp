#include "octanet/cli.hpp"

#include "octanet/closed_forms.hpp"
#include "octanet/generators.hpp"
#include "octanet/graph_io.hpp"
#include "octanet/index_dsl.hpp"
#include "octanet/indices.hpp"
#include "octanet/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace octanet {

namespace {

// Bad flag values or unusable input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GenerateOpts {
  std::string family;
  int n = 0;
  std::string format = "json";
  std::string orientation;
  std::string out;
};

struct PartitionOpts {
  std::string family;
  int n = 0;
  std::string basis = "degree";
  std::string out;
};

struct IndexOpts {
  std::string family;
  int n = 0;
  std::string graph;
  std::vector<std::string> indices;
  std::string expr;
  std::string basis;
  int approx = -1;
  std::string out;
};

struct VerifyOpts {
  std::vector<std::string> families;
  std::string n_range = "1..5";
  std::string format = "markdown";
  bool strict = false;
  std::string out;
};

struct PlotOpts {
  std::string family;
  std::string index;
  std::string n_range = "1..5";
  std::string out;
};

struct ClaimsOpts {
  std::string out;
};

const std::vector<std::string> kFamilies = {"poh", "tp", "dpoh"};

std::vector<std::string> index_choices() {
  std::vector<std::string> names = builtin_index_names();
  names.push_back("wiener");
  return names;
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open --out file '" + path + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read --graph file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

NRange n_range_flag(const std::string& text) {
  try {
    return parse_n_range(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--n: ") + e.what());
  }
}

void run_generate(const GenerateOpts& o, std::ostream& out) {
  const Family family = parse_family(o.family);
  if (!o.orientation.empty() && family != Family::TP) {
    throw UsageError("--orientation applies only to --family tp");
  }
  const Network g = family == Family::TP && o.orientation == "reverse" ? generate_tp(o.n, PrismMatching::Reverse)
                                                                        : generate(family, o.n);
  std::string text;
  if (o.format == "json") {
    text = to_json(g);
  } else if (o.format == "dot") {
    text = to_dot(g);
  } else {
    text = to_edgelist(g);
  }
  emit(text, o.out, out);
}

void run_partition(const PartitionOpts& o, std::ostream& out) {
  const Network g = generate(parse_family(o.family), o.n);
  std::string text = "\"(a,b)\",count\n";
  for (const auto& [cls, count] : edge_partition(g, parse_basis(o.basis)).classes) {
    text += "\"(" + std::to_string(cls.first) + "," + std::to_string(cls.second) + ")\"," + std::to_string(count) +
            "\n";
  }
  emit(text, o.out, out);
}

void run_index(const IndexOpts& o, std::ostream& out) {
  if (o.graph.empty() == o.family.empty()) throw UsageError("give exactly one of --family or --graph");
  if (!o.family.empty() && o.n < 1) throw UsageError("--n is required with --family");
  if (o.indices.empty() == o.expr.empty()) throw UsageError("give either --index or --expr");
  if (!o.basis.empty() && o.expr.empty()) throw UsageError("--basis applies only to --expr");

  const Network g = o.graph.empty() ? generate(parse_family(o.family), o.n) : [&] {
    try {
      return network_from_json(read_file(o.graph));
    } catch (const GraphError& e) {
      throw UsageError(std::string("--graph: ") + e.what());
    }
  }();

  std::vector<std::pair<std::string, RadicalValue>> rows;
  if (!o.expr.empty()) {
    dsl::ExprPtr e;
    try {
      e = dsl::parse(o.expr);
    } catch (const dsl::ParseError& err) {
      throw UsageError(std::string("--expr: ") + err.what());
    }
    try {
      std::optional<Basis> basis = o.basis.empty() ? dsl::expression_basis(*e) : parse_basis(o.basis);
      rows.emplace_back(dsl::to_string(*e), compute(g, dsl::to_index_spec(e, basis.value_or(Basis::Degree), g)));
    } catch (const dsl::EvalError& err) {
      throw UsageError(std::string("--expr: ") + err.what());
    } catch (const ArithmeticError& err) {
      throw UsageError(std::string("--expr: ") + err.what());
    }
  }
  for (const auto& name : o.indices) {
    if (name == "wiener") {
      try {
        rows.emplace_back(name, RadicalValue(wiener(g)));
      } catch (const GraphError& err) {
        throw UsageError(std::string("wiener: ") + err.what());
      }
    } else {
      rows.emplace_back(name, compute(g, builtin(name)));
    }
  }

  std::string text = o.approx >= 0 ? "index,value,approx\n" : "index,value\n";
  for (const auto& [name, value] : rows) {
    text += name + "," + value.str();
    if (o.approx >= 0) text += "," + value.approx(o.approx);
    text += "\n";
  }
  emit(text, o.out, out);
}

int run_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  std::vector<Family> families;
  for (const auto& f : o.families) {
    if (f == "all") {
      families = {Family::POH, Family::TP, Family::DPOH};
      break;
    }
    const Family fam = parse_family(f);
    if (std::find(families.begin(), families.end(), fam) == families.end()) families.push_back(fam);
  }
  std::sort(families.begin(), families.end());
  const NRange range = n_range_flag(o.n_range);
  const auto results = verify(families, range);
  emit(emit_report(results, {families, range}, parse_report_format(o.format)), o.out, out);

  if (!o.strict) return 0;
  int failures = 0;
  for (const auto& r : results) {
    if (r.status == Status::Mismatch && is_known_consistent(*r.claim)) {
      err << "strict: " << family_name(r.claim->family) << " " << r.claim->quantity << " ("
          << provenance_name(r.claim->provenance) << ") fails at n=" << r.n << "\n";
      ++failures;
    }
  }
  return failures ? 1 : 0;
}

void run_plot(const PlotOpts& o, std::ostream& out) {
  emit(to_csv(plot_data(parse_family(o.family), o.index, n_range_flag(o.n_range))), o.out, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate octahedral silicate networks, compute degree-based indices exactly, and check published "
               "closed forms against brute force.",
               "octanet"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.footer("Families: " + joined(kFamilies) + "\nIndices: " + joined(index_choices()) +
             "\nExit codes: 0 success, 1 internal error or --strict failure, 2 bad flags or input.");
  const auto family_check = CLI::IsMember(kFamilies, CLI::ignore_case);

  GenerateOpts gen;
  auto* cmd_gen = app.add_subcommand("generate", "Build a network and write it as JSON, DOT or an edge list");
  cmd_gen->add_option("--family", gen.family, "Network family: " + joined(kFamilies))
      ->required()
      ->transform(family_check);
  cmd_gen->add_option("--n", gen.n, "Dimension (>= 1)")->required()->check(CLI::Range(1, 400));
  cmd_gen->add_option("--format", gen.format, "json, dot or edgelist")
      ->check(CLI::IsMember({"json", "dot", "edgelist"}))
      ->capture_default_str();
  cmd_gen->add_option("--orientation", gen.orientation, "TP prism matching: forward or reverse")
      ->check(CLI::IsMember({"forward", "reverse"}));
  cmd_gen->add_option("--out", gen.out, "Write to this file instead of stdout");

  PartitionOpts part;
  auto* cmd_part = app.add_subcommand("partition", "Print the edge partition as CSV");
  cmd_part->add_option("--family", part.family, "Network family: " + joined(kFamilies))
      ->required()
      ->transform(family_check);
  cmd_part->add_option("--n", part.n, "Dimension (>= 1)")->required()->check(CLI::Range(1, 400));
  cmd_part->add_option("--basis", part.basis, "degree or degsum")
      ->check(CLI::IsMember({"degree", "degsum"}))
      ->capture_default_str();
  cmd_part->add_option("--out", part.out, "Write to this file instead of stdout");

  IndexOpts idx;
  auto* cmd_idx = app.add_subcommand("index", "Compute indices of a generated or imported network");
  cmd_idx->add_option("--family", idx.family, "Network family: " + joined(kFamilies))->transform(family_check);
  cmd_idx->add_option("--n", idx.n, "Dimension (>= 1), with --family")->check(CLI::Range(1, 400));
  cmd_idx->add_option("--graph", idx.graph, "Network JSON file written by `generate`");
  cmd_idx->add_option("--index", idx.indices, "Index name, repeatable: " + joined(index_choices()))
      ->check(CLI::IsMember(index_choices()));
  cmd_idx->add_option("--expr", idx.expr, "Per-edge expression over du, dv or Su, Sv, e.g. 'sqrt(du*dv)'");
  cmd_idx->add_option("--basis", idx.basis, "degree or degsum, for --expr")
      ->check(CLI::IsMember({"degree", "degsum"}));
  cmd_idx->add_option("--approx", idx.approx, "Add a decimal column with this many digits")
      ->check(CLI::Range(1, 200));
  cmd_idx->add_option("--out", idx.out, "Write to this file instead of stdout");

  VerifyOpts ver;
  auto* cmd_ver = app.add_subcommand("verify", "Compare every registered claim with brute force");
  std::vector<std::string> verify_families = kFamilies;
  verify_families.push_back("all");
  cmd_ver->add_option("--family", ver.families, "Repeatable: " + joined(verify_families))
      ->required()
      ->transform(CLI::IsMember(verify_families, CLI::ignore_case));
  cmd_ver->add_option("--n", ver.n_range, "Dimension or range LO..HI")->capture_default_str();
  cmd_ver->add_option("--format", ver.format, "json, markdown or csv")
      ->check(CLI::IsMember({"json", "markdown", "csv"}))
      ->capture_default_str();
  cmd_ver->add_flag("--strict", ver.strict, "Exit 1 if a known-consistent claim fails");
  cmd_ver->add_option("--out", ver.out, "Write to this file instead of stdout");

  PlotOpts plot;
  auto* cmd_plot = app.add_subcommand("plot-data", "Computed and claimed index values per dimension, as CSV");
  cmd_plot->add_option("--family", plot.family, "Network family: " + joined(kFamilies))
      ->required()
      ->transform(family_check);
  cmd_plot->add_option("--index", plot.index, "Index name: " + joined(builtin_index_names()))
      ->required()
      ->check(CLI::IsMember(builtin_index_names()));
  cmd_plot->add_option("--n", plot.n_range, "Dimension or range LO..HI")->capture_default_str();
  cmd_plot->add_option("--out", plot.out, "Write to this file instead of stdout");

  ClaimsOpts claims;
  auto* cmd_claims = app.add_subcommand("claims", "Export the claim registry as JSON");
  cmd_claims->add_option("--out", claims.out, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_gen) run_generate(gen, out);
    if (*cmd_part) run_partition(part, out);
    if (*cmd_idx) run_index(idx, out);
    if (*cmd_ver) return run_verify(ver, out, err);
    if (*cmd_plot) run_plot(plot, out);
    if (*cmd_claims) emit(claims_json(), claims.out, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownIndexError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace octanet
