#pragma once

#include "octanet/closed_forms.hpp"
#include "octanet/graph.hpp"
#include "octanet/radical.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace octanet {

extern const char* const kToolVersion;

enum class Status { ExactMatch, Mismatch, BelowValidity };

std::string status_name(Status s);

struct ComparisonResult {
  const ClaimRecord* claim = nullptr;
  int n = 0;
  RadicalValue computed;
  RadicalValue claimed;  // zero when BelowValidity
  Status status = Status::BelowValidity;
  std::string residual;  // computed - claimed, 12 fractional digits; empty when BelowValidity
};

struct NRange {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const NRange&, const NRange&) = default;
};

/// Accepts `5` or `1..5`. Throws std::invalid_argument.
NRange parse_n_range(const std::string& text);

using ClaimFilter = std::function<bool(const ClaimRecord&)>;

/// Brute-force value of a claim quantity on a generated network.
RadicalValue measure(const Network& g, const std::string& quantity);

/// One result per (claim, n), sorted by family, registry order, n.
std::vector<ComparisonResult> verify_family(Family family, NRange range, const ClaimFilter& filter = {});
std::vector<ComparisonResult> verify(const std::vector<Family>& families, NRange range,
                                     const ClaimFilter& filter = {});

/// Worker count: OCTANET_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

struct Summary {
  std::size_t exact_match = 0;
  std::size_t mismatch = 0;
  std::size_t below_validity = 0;
  std::size_t total() const { return exact_match + mismatch + below_validity; }
};

Summary summarize(const std::vector<ComparisonResult>& results);

class UnsupportedFormat : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class ReportFormat { Json, Markdown, Csv };

/// Throws UnsupportedFormat.
ReportFormat parse_report_format(const std::string& name);

struct ReportMeta {
  std::vector<Family> families;
  NRange n_range;
};

std::string emit_report(const std::vector<ComparisonResult>& results, const ReportMeta& meta, ReportFormat format);

/// True for claims expected to match at every n (the build's self-check set).
bool is_known_consistent(const ClaimRecord& claim);

struct PlotSeries {
  std::vector<std::string> columns;  // "n", "computed", then "claimed:<provenance>" per variant
  std::vector<std::vector<std::string>> rows;
};

/// Throws UnknownIndexError for names outside builtin_index_names().
PlotSeries plot_data(Family family, const std::string& index, NRange range);
std::string to_csv(const PlotSeries& series);

}  // namespace octanet
