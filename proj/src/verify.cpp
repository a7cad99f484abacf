#include "octanet/verify.hpp"

#include "octanet/generators.hpp"
#include "octanet/indices.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <tuple>

namespace octanet {

const char* const kToolVersion = "0.1.0";

std::string status_name(Status s) {
  switch (s) {
    case Status::ExactMatch: return "ExactMatch";
    case Status::Mismatch: return "Mismatch";
    case Status::BelowValidity: return "BelowValidity";
  }
  return "?";
}

namespace {

int parse_positive(std::string_view text, const std::string& whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("bad dimension range '" + whole + "' (expected N or LO..HI)");
  }
  if (value < 1) throw std::invalid_argument("dimension must be at least 1 in '" + whole + "'");
  return value;
}

}  // namespace

NRange parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_positive(text, text);
    return {n, n};
  }
  NRange r{parse_positive(std::string_view(text).substr(0, dots), text),
           parse_positive(std::string_view(text).substr(dots + 2), text)};
  if (r.hi < r.lo) throw std::invalid_argument("empty dimension range '" + text + "'");
  return r;
}

RadicalValue measure(const Network& g, const std::string& quantity) {
  switch (quantity_kind(quantity)) {
    case QuantityKind::VertexCount: return RadicalValue(Rational(g.vertex_count()));
    case QuantityKind::EdgeCount: return RadicalValue(Rational(g.edge_count()));
    case QuantityKind::TableRow: {
      const auto [basis, cls] = table_row_class(quantity);
      return RadicalValue(Rational(edge_partition(g, basis).count(cls)));
    }
    case QuantityKind::Index: break;
  }
  return compute(g, builtin(quantity));
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("OCTANET_THREADS")) {
    unsigned cap = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0) return cap;
  }
  return hw;
}

namespace {

struct Task {
  Family family;
  int n;
};

std::vector<ComparisonResult> run_task(const Task& task, const ClaimFilter& filter) {
  std::vector<const ClaimRecord*> claims;
  for (const auto& c : registry()) {
    if (c.family == task.family && (!filter || filter(c))) claims.push_back(&c);
  }
  std::vector<ComparisonResult> out;
  if (claims.empty()) return out;

  const Network g = generate(task.family, task.n);
  std::map<std::string, RadicalValue> measured;
  for (const ClaimRecord* c : claims) {
    auto it = measured.find(c->quantity);
    if (it == measured.end()) it = measured.emplace(c->quantity, measure(g, c->quantity)).first;

    ComparisonResult r;
    r.claim = c;
    r.n = task.n;
    r.computed = it->second;
    if (task.n < c->claimed.min_n()) {
      r.status = Status::BelowValidity;
    } else {
      r.claimed = c->claimed.evaluate(task.n);
      r.status = r.computed == r.claimed ? Status::ExactMatch : Status::Mismatch;
      r.residual = (r.computed - r.claimed).approx(12);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<ComparisonResult> verify(const std::vector<Family>& families, NRange range, const ClaimFilter& filter) {
  std::vector<Task> tasks;
  for (Family f : families) {
    if (f == Family::Custom) throw std::invalid_argument("custom graphs have no claims to verify");
    for (int n = range.lo; n <= range.hi; ++n) tasks.push_back({f, n});
  }

  std::vector<std::vector<ComparisonResult>> partial(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        partial[i] = run_task(tasks[i], filter);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::min<std::size_t>(worker_count(), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<ComparisonResult> results;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(results));
  std::stable_sort(results.begin(), results.end(), [](const ComparisonResult& a, const ComparisonResult& b) {
    const auto ka = std::make_tuple(a.claim->family, registry_position(*a.claim), a.n);
    const auto kb = std::make_tuple(b.claim->family, registry_position(*b.claim), b.n);
    return ka < kb;
  });
  return results;
}

std::vector<ComparisonResult> verify_family(Family family, NRange range, const ClaimFilter& filter) {
  return verify(std::vector<Family>{family}, range, filter);
}

Summary summarize(const std::vector<ComparisonResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case Status::ExactMatch: ++s.exact_match; break;
      case Status::Mismatch: ++s.mismatch; break;
      case Status::BelowValidity: ++s.below_validity; break;
    }
  }
  return s;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  if (name == "csv") return ReportFormat::Csv;
  throw UnsupportedFormat("unsupported report format '" + name + "' (expected json, markdown or csv)");
}

namespace {

using ojson = nlohmann::ordered_json;

std::string join_families(const std::vector<Family>& fs, const char* sep) {
  std::string out;
  for (Family f : fs) {
    if (!out.empty()) out += sep;
    out += family_name(f);
  }
  return out;
}

std::string emit_json(const std::vector<ComparisonResult>& results, const ReportMeta& meta) {
  ojson doc;
  ojson families = ojson::array();
  for (Family f : meta.families) families.push_back(family_name(f));
  doc["meta"] = {{"families", families},
                 {"n_range", {meta.n_range.lo, meta.n_range.hi}},
                 {"tool_version", kToolVersion},
                 {"tp_matching", matching_name(PrismMatching::Forward)}};
  doc["results"] = ojson::array();
  for (const auto& r : results) {
    ojson row = {{"family", family_name(r.claim->family)},
                 {"quantity", r.claim->quantity},
                 {"provenance", provenance_name(r.claim->provenance)},
                 {"source", r.claim->citation.source},
                 {"n", r.n},
                 {"status", status_name(r.status)},
                 {"computed", r.computed.str()}};
    if (r.status == Status::BelowValidity) {
      row["claimed"] = nullptr;
      row["residual"] = nullptr;
    } else {
      row["claimed"] = r.claimed.str();
      row["residual"] = r.residual;
    }
    if (r.status == Status::Mismatch) row["quote"] = r.claim->citation.quote;
    doc["results"].push_back(std::move(row));
  }
  const Summary s = summarize(results);
  doc["summary"] = {{"ExactMatch", s.exact_match},
                    {"Mismatch", s.mismatch},
                    {"BelowValidity", s.below_validity},
                    {"total", s.total()}};
  return doc.dump(2) + "\n";
}

std::string one_line(const std::string& text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (c == '\n' || c == '\t' || c == '\r' || c == ' ') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string emit_markdown(const std::vector<ComparisonResult>& results, const ReportMeta& meta) {
  std::ostringstream out;
  const Summary s = summarize(results);
  out << "# Verification report\n\n";
  out << "- families: " << join_families(meta.families, ", ") << "\n";
  out << "- n: " << meta.n_range.lo << ".." << meta.n_range.hi << "\n";
  out << "- tool version: " << kToolVersion << "\n";
  out << "- TP prism matching: " << matching_name(PrismMatching::Forward) << "\n\n";
  out << "| status | count |\n|---|---|\n";
  out << "| ExactMatch | " << s.exact_match << " |\n";
  out << "| Mismatch | " << s.mismatch << " |\n";
  out << "| BelowValidity | " << s.below_validity << " |\n";
  out << "| total | " << s.total() << " |\n";

  std::optional<Family> family;
  const ClaimRecord* claim = nullptr;
  for (const auto& r : results) {
    if (family != r.claim->family) {
      family = r.claim->family;
      out << "\n## " << family_name(*family) << "\n";
      claim = nullptr;
    }
    if (claim != r.claim) {
      claim = r.claim;
      out << "\n### " << claim->quantity << " (" << provenance_name(claim->provenance) << ", "
          << claim->citation.source << ")\n\n";
      out << "Claimed: `" << claim->claimed.str() << "`";
      if (claim->claimed.min_n() > 1) out << " for n >= " << claim->claimed.min_n();
      out << "\n\n| n | | computed | claimed | residual | quote |\n|---|---|---|---|---|---|\n";
    }
    out << "| " << r.n << " | ";
    switch (r.status) {
      case Status::ExactMatch: out << "✓"; break;
      case Status::Mismatch: out << "✗"; break;
      case Status::BelowValidity: out << "-"; break;
    }
    out << " | `" << r.computed.str() << "` | ";
    if (r.status == Status::BelowValidity) {
      out << "below validity | | |\n";
      continue;
    }
    out << "`" << r.claimed.str() << "` | " << r.residual << " | ";
    if (r.status == Status::Mismatch) out << "`" << one_line(r.claim->citation.quote) << "`";
    out << " |\n";
  }
  return out.str();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_csv(const std::vector<ComparisonResult>& results) {
  std::ostringstream out;
  out << "family,quantity,provenance,source,n,status,computed,claimed,residual,quote\n";
  for (const auto& r : results) {
    const bool valid = r.status != Status::BelowValidity;
    out << family_name(r.claim->family) << ',' << csv_field(r.claim->quantity) << ','
        << provenance_name(r.claim->provenance) << ',' << csv_field(r.claim->citation.source) << ',' << r.n << ','
        << status_name(r.status) << ',' << csv_field(r.computed.str()) << ','
        << (valid ? csv_field(r.claimed.str()) : "") << ',' << r.residual << ','
        << (r.status == Status::Mismatch ? csv_field(r.claim->citation.quote) : "") << '\n';
  }
  return out.str();
}

}  // namespace

std::string emit_report(const std::vector<ComparisonResult>& results, const ReportMeta& meta, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return emit_json(results, meta);
    case ReportFormat::Markdown: return emit_markdown(results, meta);
    case ReportFormat::Csv: return emit_csv(results);
  }
  throw UnsupportedFormat("unsupported report format");
}

bool is_known_consistent(const ClaimRecord& claim) {
  static const std::set<std::string> indices = {"randic1", "randic1/2", "randic-1", "randic-1/2",
                                                "zagreb1", "abc",       "ga"};
  const auto kind = quantity_kind(claim.quantity);
  if (kind == QuantityKind::Index) {
    if (!indices.count(claim.quantity)) return false;
    if (claim.family == Family::DPOH && claim.quantity == "zagreb1") return claim.provenance == Provenance::Corrected;
    return claim.provenance == Provenance::TheoremStatement;
  }
  if (kind == QuantityKind::TableRow) {
    return table_row_class(claim.quantity).first == Basis::Degree &&
           claim.provenance == Provenance::TheoremStatement;
  }
  if (claim.family == Family::DPOH) return claim.provenance == Provenance::Corrected;
  return !(claim.family == Family::POH && kind == QuantityKind::VertexCount);
}

PlotSeries plot_data(Family family, const std::string& index, NRange range) {
  const IndexSpec spec = builtin(index);
  std::vector<const ClaimRecord*> variants;
  for (const auto& c : registry()) {
    if (c.family == family && c.quantity == index) variants.push_back(&c);
  }
  PlotSeries series;
  series.columns = {"n", "computed"};
  for (const auto* c : variants) series.columns.push_back("claimed:" + provenance_name(c->provenance));
  for (int n = range.lo; n <= range.hi; ++n) {
    std::vector<std::string> row = {std::to_string(n), compute(generate(family, n), spec).approx(12)};
    for (const auto* c : variants) {
      row.push_back(n < c->claimed.min_n() ? "" : c->claimed.evaluate(n).approx(12));
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

std::string to_csv(const PlotSeries& series) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(series.columns);
  for (const auto& row : series.rows) line(row);
  return out;
}

}  // namespace octanet
