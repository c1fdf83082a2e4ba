#include "lrkm/cli/report.hpp"

#include <charconv>

namespace lrkm::cli {

namespace {

using nlohmann::ordered_json;

ordered_json optional_number(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::optional<double> read_optional(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

RunReport make_report(const ResolvedSpec& spec, const real& alpha, const real& beta, const SolveReport& result) {
  RunReport r;
  r.version = LRKM_VERSION;
  r.precision = kPrecisionName;
  r.input = spec.echo;
  r.alpha = to_double(alpha);
  r.beta = to_double(beta);
  for (const auto& x : result.nodes) r.nodes.push_back(to_double(x));
  r.kept = result.kept;
  r.dropped = result.dropped;
  r.warnings = result.warnings;
  r.iterations = result.iterations;
  r.stopped_early = result.stopped_early;
  for (const auto& d : result.iterates_delta) r.iterates_delta.push_back(to_double(d));
  const Polynomial approx = result.approximation();
  for (const auto& c : approx.coeffs()) r.solution.push_back(to_double(c));
  if (result.errors) {
    for (const auto& row : *result.errors) {
      r.rows.push_back({to_double(row.x), to_double(row.exact), to_double(row.approx), to_double(row.abs_error)});
    }
  } else {
    for (const auto& x : result.config.grid) {
      r.rows.push_back({to_double(x), std::nullopt, to_double(approx(x)), std::nullopt});
    }
  }
  return r;
}

ordered_json to_json(const RunReport& r) {
  ordered_json j;
  j["version"] = r.version;
  j["precision"] = r.precision;
  ordered_json input = ordered_json::object();
  for (const auto& e : r.input) input[e.section][e.key] = e.value;
  j["input"] = input;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["nodes"] = r.nodes;
  j["kept"] = r.kept;
  j["dropped"] = r.dropped;
  j["warnings"] = r.warnings;
  j["iterations"] = r.iterations;
  j["stopped_early"] = r.stopped_early;
  j["iterates_delta"] = r.iterates_delta;
  j["solution"] = r.solution;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o;
    o["x"] = row.x;
    o["exact"] = optional_number(row.exact);
    o["approx"] = row.approx;
    o["abs_error"] = optional_number(row.abs_error);
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  if (r.wall_time_s) j["wall_time_s"] = *r.wall_time_s;
  return j;
}

RunReport report_from_json(const ordered_json& j) {
  RunReport r;
  r.version = j.at("version").get<std::string>();
  r.precision = j.at("precision").get<std::string>();
  for (const auto& [section, keys] : j.at("input").items()) {
    for (const auto& [key, value] : keys.items()) r.input.push_back({section, key, value.get<std::string>()});
  }
  r.alpha = j.at("alpha").get<double>();
  r.beta = j.at("beta").get<double>();
  r.nodes = j.at("nodes").get<std::vector<double>>();
  r.kept = j.at("kept").get<std::vector<std::size_t>>();
  r.dropped = j.at("dropped").get<std::vector<std::size_t>>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.iterations = j.at("iterations").get<int>();
  r.stopped_early = j.at("stopped_early").get<bool>();
  r.iterates_delta = j.at("iterates_delta").get<std::vector<double>>();
  r.solution = j.at("solution").get<std::vector<double>>();
  for (const auto& row : j.at("rows")) {
    r.rows.push_back({row.at("x").get<double>(), read_optional(row, "exact"), row.at("approx").get<double>(),
                      read_optional(row, "abs_error")});
  }
  r.wall_time_s = read_optional(j, "wall_time_s");
  return r;
}

}  // namespace lrkm::cli
