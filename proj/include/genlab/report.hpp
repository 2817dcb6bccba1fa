#ifndef GENLAB_REPORT_HPP_
#define GENLAB_REPORT_HPP_

#include <map>
#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "genlab/certificate.hpp"
#include "genlab/hardy_ops.hpp"
#include "genlab/membership.hpp"

namespace genlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Serializable record of one experiment run.  Numbers are emitted with
/// shortest round-trip formatting, so identical inputs (and seeds) produce
/// byte-identical documents; the timestamp honors SOURCE_DATE_EPOCH for
/// reproducible runs.  Report files are written fresh per run and never
/// edited in place; an optional run log accumulates one report per line,
/// append-only.
struct ExperimentReport {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Json> results;
  std::string timestamp;

  Json to_json() const;
  static ExperimentReport from_json(const Json& j);
  std::string serialize() const;  // to_json().dump(2) + newline
};

/// ISO-8601 UTC timestamp; reads SOURCE_DATE_EPOCH when set.
std::string current_timestamp();

// ----- structured entries ---------------------------------------------------

Json to_json(const Verdict& v);
Json to_json(const Interval& iv);
Json to_json(const EscapePoint& pt);
Json to_json(const EscapeRecord& rec);
Json to_json(const DivergenceCertificate& cert);
Json to_json(const RadialSample& s);
Json to_json(const GrowthReport& g);
Json to_json(const QuadratureResult& q);

/// Radial trace rows (t, r, value, log_inv_one_minus_r, log_value, flagged).
struct RadialTraceCsv {
  std::vector<RadialSample> rows;
};
/// Index trace rows (K, partial_sum, lower_bound).
struct IndexTraceCsv {
  struct Row {
    std::uint64_t position;
    double partial_sum;
    double lower_bound;
  };
  std::vector<Row> rows;
};

std::string to_csv(const RadialTraceCsv& trace);
std::string to_csv(const IndexTraceCsv& trace);

/// Shortest round-trip decimal formatting (the CSV/JSON number contract).
std::string format_double(double x);

/// Extracts every radial/index trace entry of a report into CSV text;
/// returns nullopt (with no side effects) when the report holds no trace.
std::optional<std::string> emit_plot_data(const ExperimentReport& report);

}  // namespace genlab

#endif  // GENLAB_REPORT_HPP_
