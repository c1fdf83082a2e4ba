#include "lrkm/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrkm/cli/report.hpp"
#include "lrkm/cli/specfile.hpp"
#include "lrkm/cli/verify.hpp"
#include "lrkm/lrkm.hpp"

namespace lrkm::cli {

namespace {

// Decimals shown for solution values in tables; limited by the working precision.
constexpr int kTableDecimals = kRealDigits10 >= 30 ? 21 : kRealDigits10 >= 18 ? 18 : 15;
constexpr int kErrorDigits = 2;

struct Overrides {
  std::string m;
  std::string n;
  std::string node_offset;
  std::string grid;
  std::string alpha;
  std::string beta;

  void apply(SpecFile& file) const {
    if (!m.empty()) file.set("m", m, "--m");
    if (!n.empty()) file.set("n", n, "--n");
    if (!node_offset.empty()) file.set("node_offset", node_offset, "--node-offset");
    if (!grid.empty()) file.set("grid", grid, "--grid");
    if (!alpha.empty()) file.set("alpha", alpha, "--alpha");
    if (!beta.empty()) file.set("beta", beta, "--beta");
  }
};

struct Run {
  ResolvedSpec spec;
  std::optional<SolveReport> result;
  std::optional<double> seconds;
  std::string failure;
  int failure_code = kExitOk;
};

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SpecError*>(&e) || dynamic_cast<const DomainError*>(&e)) return kExitBadInput;
  return kExitNumerical;
}

void run_solve(Run& run) {
  try {
    const auto t0 = std::chrono::steady_clock::now();
    run.result = solve(run.spec.problem(), run.spec.config());
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } catch (const std::exception& e) {
    run.failure = e.what();
    run.failure_code = exit_code_for(e);
  }
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + "  " : s + std::string(width - s.size(), ' ');
}

std::string x_label(const real& x) { return format_double(to_double(x)); }

void write_table(std::ostream& os, const SolveReport& r) {
  const std::size_t w = kTableDecimals + 6;
  if (r.errors) {
    os << pad("x", 8) << pad("Exact Sol.", w) << pad("Approximate Sol.", w) << "Absolute Error\n";
    for (const auto& row : *r.errors) {
      os << pad(x_label(row.x), 8) << pad(format_fixed(row.exact, kTableDecimals), w)
         << pad(format_fixed(row.approx, kTableDecimals), w) << format_sci(row.abs_error, kErrorDigits) << "\n";
    }
  } else {
    const Polynomial z = r.approximation();
    os << pad("x", 8) << "Approximate Sol.\n";
    for (const auto& x : r.config.grid) os << pad(x_label(x), 8) << format_fixed(z(x), kTableDecimals) << "\n";
  }
  for (const auto& w_msg : r.warnings) os << "warning: " << w_msg << "\n";
}

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

void write_csv_rows(std::ostream& os, const RunReport& r, const std::string& prefix) {
  for (const auto& row : r.rows) {
    os << prefix << format_double(row.x) << "," << optional_field(row.exact) << "," << format_double(row.approx)
       << "," << optional_field(row.abs_error) << "\n";
  }
}

RunReport report_for(const Run& run, bool timing) {
  RunReport rep = make_report(run.spec, run.spec.alpha, run.spec.beta, *run.result);
  if (timing) rep.wall_time_s = run.seconds;
  return rep;
}

// Writes `text` to `path`, or to `out` when path is empty.
int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!(file << text)) {
    err << "error: cannot write '" << path << "'\n";
    return kExitBadInput;
  }
  return kExitOk;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return parts;
}

struct SolveOptions {
  std::string spec_path;
  Overrides overrides;
  std::string format = "table";
  std::string out_path;
  bool timing = false;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  Run run;
  try {
    SpecFile file = SpecFile::load(opt.spec_path);
    opt.overrides.apply(file);
    run.spec = file.resolve();
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  run_solve(run);
  if (!run.result) {
    err << "error: " << run.failure << "\n";
    return run.failure_code;
  }

  std::ostringstream text;
  if (opt.format == "table") {
    write_table(text, *run.result);
  } else if (opt.format == "csv") {
    text << "x,exact,approx,abs_error\n";
    write_csv_rows(text, report_for(run, false), "");
  } else {
    text << to_json(report_for(run, opt.timing)).dump(2) << "\n";
  }
  return emit(text.str(), opt.out_path, out, err);
}

struct SweepOptions {
  std::string spec_path;
  Overrides overrides;
  std::string alpha_list;
  std::string beta_list;
  std::string format = "table";
  std::string out_path;
  bool timing = false;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  const auto alphas = split_list(opt.alpha_list);
  const auto betas = split_list(opt.beta_list);
  if (alphas.empty() || alphas.size() != betas.size()) {
    err << "error: --alpha-list and --beta-list must be non-empty and of equal length (got " << alphas.size()
        << " and " << betas.size() << ")\n";
    return kExitBadInput;
  }

  std::vector<Run> runs(alphas.size());
  try {
    const SpecFile base = SpecFile::load(opt.spec_path);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      SpecFile file = base;
      opt.overrides.apply(file);
      file.set("alpha", alphas[i], "--alpha-list");
      file.set("beta", betas[i], "--beta-list");
      runs[i].spec = file.resolve();
    }
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  std::vector<std::future<void>> pending;
  for (auto& run : runs) pending.push_back(std::async(std::launch::async, [&run] { run_solve(run); }));
  for (auto& f : pending) f.get();

  bool any_failed = false;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (!runs[i].result) {
      any_failed = true;
      err << "error: pair (" << alphas[i] << ", " << betas[i] << "): " << runs[i].failure << "\n";
    }
  }

  std::ostringstream text;
  if (opt.format == "table") {
    // Error cells are short; solution values need the full table width.
    const bool errors = runs.front().spec.exact.has_value();
    const std::size_t w = errors ? 14 : kTableDecimals + 6;
    auto line = [&text, w](const std::string& first, const std::vector<std::string>& cells) {
      text << pad(first, 8);
      for (std::size_t i = 0; i < cells.size(); ++i) text << (i + 1 < cells.size() ? pad(cells[i], w) : cells[i]);
      text << "\n";
    };
    std::vector<std::string> header;
    for (std::size_t i = 0; i < runs.size(); ++i) header.push_back("(" + alphas[i] + ", " + betas[i] + ")");
    line("x", header);
    const std::vector<real> grid = runs.front().spec.config().grid;
    for (std::size_t row = 0; row < grid.size(); ++row) {
      std::vector<std::string> cells;
      for (const auto& run : runs) {
        if (!run.result) {
          cells.push_back("failed");
        } else if (run.result->errors) {
          cells.push_back(format_sci((*run.result->errors)[row].abs_error, kErrorDigits));
        } else {
          cells.push_back(format_fixed(run.result->approximation()(grid[row]), kTableDecimals));
        }
      }
      line(x_label(grid[row]), cells);
    }
  } else if (opt.format == "csv") {
    text << "alpha,beta,x,exact,approx,abs_error\n";
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].result) write_csv_rows(text, report_for(runs[i], false), alphas[i] + "," + betas[i] + ",");
    }
  } else {
    nlohmann::ordered_json doc;
    doc["runs"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].result) {
        doc["runs"].push_back(to_json(report_for(runs[i], opt.timing)));
      } else {
        nlohmann::ordered_json failed;
        failed["alpha"] = alphas[i];
        failed["beta"] = betas[i];
        failed["error"] = runs[i].failure;
        doc["runs"].push_back(std::move(failed));
      }
    }
    text << doc.dump(2) << "\n";
  }
  const int written = emit(text.str(), opt.out_path, out, err);
  if (written != kExitOk) return written;
  return any_failed ? kExitNumerical : kExitOk;
}

int cmd_verify(const std::string& suite, bool corrupt_gamma, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  if (corrupt_gamma) options.gamma = [](const real& x) { return lrkm::gamma(x) * (1 + real(1e-9)); };
  const auto results = run_verify(suite, options);
  std::vector<std::string> failed;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.suite << ": " << r.name << "  (" << r.detail << ")\n";
    if (!r.passed) failed.push_back(r.name);
  }
  out << results.size() - failed.size() << "/" << results.size() << " properties passed\n";
  if (failed.empty()) return kExitOk;
  err << "verify failed:";
  for (std::size_t i = 0; i < failed.size(); ++i) err << (i ? ", " : " ") << failed[i];
  err << "\n";
  return kExitVerifyFailed;
}

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--m", o.m, "Polynomial degree m (overrides the spec file)");
  cmd->add_option("--n", o.n, "Number of iterations n");
  cmd->add_option("--node-offset", o.node_offset, "Node offset c in xi_j = (j + c)/m");
  cmd->add_option("--grid", o.grid, "Evaluation grid start:stop:step");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional three-point boundary value problem solver", "lrkm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("lrkm ") + LRKM_VERSION + " (" + kPrecisionName + " precision)");

  const std::vector<std::string> formats = {"table", "csv", "json"};

  SolveOptions solve_opt;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve the problem in a spec file");
  solve_cmd->add_option("spec", solve_opt.spec_path, "Spec file")->required();
  add_overrides(solve_cmd, solve_opt.overrides);
  solve_cmd->add_option("--alpha", solve_opt.overrides.alpha, "Order alpha");
  solve_cmd->add_option("--beta", solve_opt.overrides.beta, "Order beta");
  solve_cmd->add_option("--format", solve_opt.format, "Output format")->check(CLI::IsMember(formats));
  solve_cmd->add_option("--out", solve_opt.out_path, "Write output to this file");
  solve_cmd->add_flag("--timing", solve_opt.timing, "Include wall time in json output");

  SweepOptions sweep_opt;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Solve for several (alpha, beta) pairs");
  sweep_cmd->add_option("spec", sweep_opt.spec_path, "Spec file")->required();
  sweep_cmd->add_option("--alpha-list", sweep_opt.alpha_list, "Comma-separated alpha values")->required();
  sweep_cmd->add_option("--beta-list", sweep_opt.beta_list, "Comma-separated beta values")->required();
  add_overrides(sweep_cmd, sweep_opt.overrides);
  sweep_cmd->add_option("--format", sweep_opt.format, "Output format")->check(CLI::IsMember(formats));
  sweep_cmd->add_option("--out", sweep_opt.out_path, "Write output to this file");
  sweep_cmd->add_flag("--timing", sweep_opt.timing, "Include wall time in json output");

  std::string suite = "all";
  bool corrupt_gamma = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the built-in property checks");
  verify_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"fracops", "kernel", "solver", "all"}));
  verify_cmd->add_flag("--corrupt-gamma", corrupt_gamma)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (*solve_cmd) return cmd_solve(solve_opt, out, err);
  if (*sweep_cmd) return cmd_sweep(sweep_opt, out, err);
  return cmd_verify(suite, corrupt_gamma, out, err);
}

}  // namespace lrkm::cli
