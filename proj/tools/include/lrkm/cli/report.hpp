#pragma once

// Machine-readable record of one solve.  Numbers are stored as doubles and
// written with the shortest decimal form that reads back to the same double
// (at most 17 significant digits).  Field reference: docs/report-json.md.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrkm/cli/specfile.hpp"
#include "lrkm/solver.hpp"

namespace lrkm::cli {

struct ReportRow {
  double x = 0;
  std::optional<double> exact;
  double approx = 0;
  std::optional<double> abs_error;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct RunReport {
  std::string version;
  std::string precision;
  std::vector<EchoEntry> input;

  double alpha = 0;
  double beta = 0;
  std::vector<double> nodes;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
  std::vector<std::string> warnings;
  int iterations = 0;
  bool stopped_early = false;
  std::vector<double> iterates_delta;
  /// Ascending monomial coefficients of the approximation to z.
  std::vector<double> solution;
  std::vector<ReportRow> rows;
  std::optional<double> wall_time_s;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Report for `result`, evaluating the approximation on the solver grid.
RunReport make_report(const ResolvedSpec& spec, const real& alpha, const real& beta, const SolveReport& result);

nlohmann::ordered_json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::ordered_json& j);

/// Shortest decimal that reads back as `v`.
std::string format_double(double v);

}  // namespace lrkm::cli
