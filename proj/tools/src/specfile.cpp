#include "lrkm/cli/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lrkm::cli {

namespace {

struct KeyInfo {
  std::string_view section;
  std::string_view key;
  std::string_view default_value;  // empty: no default
};

// Canonical order; also the order of the echo.
constexpr KeyInfo kKeys[] = {
    {"problem", "mode", "explicit"},
    {"problem", "alpha", ""},
    {"problem", "beta", ""},
    {"problem", "theta", ""},
    {"problem", "gamma0", "0"},
    {"problem", "gamma1", "0"},
    {"problem", "gamma2", "0"},
    {"problem", "a0", "0"},
    {"problem", "a1", "0"},
    {"problem", "a2", "1"},
    {"problem", "g", ""},
    {"problem", "exact_coeffs", ""},
    {"problem", "nonlinear", ""},
    {"solver", "m", ""},
    {"solver", "n", ""},
    {"solver", "node_offset", "0.3"},
    {"solver", "gs_tol", "1e-12"},
    {"solver", "stop_tol", ""},
    {"solver", "grid", "0:1:0.1"},
};

const KeyInfo* find_key(std::string_view key) {
  for (const auto& k : kKeys) {
    if (k.key == key) return &k;
  }
  return nullptr;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string where(const std::string& source, int line, const std::string& origin) {
  if (!origin.empty()) return origin;
  if (line == 0) return source + " (default)";
  return source + ":" + std::to_string(line);
}

// Reads entries back out of the file with consistent error reporting.
class Reader {
 public:
  Reader(const std::string& source, const std::map<std::string, std::string>& values,
         const std::map<std::string, std::pair<int, std::string>>& origins)
      : source_(source), values_(values), origins_(origins) {}

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  int line(const std::string& key) const {
    auto it = origins_.find(key);
    return it == origins_.end() ? 0 : it->second.first;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    auto it = origins_.find(key);
    const int ln = it == origins_.end() ? 0 : it->second.first;
    const std::string origin = it == origins_.end() ? "" : it->second.second;
    throw SpecError(key, ln, where(source_, ln, origin) + ": key '" + key + "': " + what);
  }

  const std::string& text(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
      const KeyInfo* info = find_key(key);
      throw SpecError(key, 0,
                      source_ + ": missing required key '" + key + "' in [" + std::string(info->section) + "]");
    }
    return it->second;
  }

  real number(const std::string& key) const {
    try {
      return parse_real(text(key));
    } catch (const std::invalid_argument&) {
      fail(key, "expected a number, got '" + text(key) + "'");
    }
  }

  int integer(const std::string& key) const {
    const std::string& s = text(key);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(key, "expected an integer, got '" + s + "'");
    return v;
  }

  expr::Expr expression(const std::string& key, const std::set<std::string>& allowed) const {
    try {
      expr::Expr e = expr::parse(text(key));
      for (const auto& v : expr::free_vars(e)) {
        if (!allowed.count(v)) fail(key, "variable '" + v + "' is not allowed here");
      }
      return e;
    } catch (const expr::ParseError& e) {
      fail(key, e.what());
    }
  }

 private:
  const std::string& source_;
  const std::map<std::string, std::string>& values_;
  const std::map<std::string, std::pair<int, std::string>>& origins_;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

SpecError::SpecError(std::string key, int line, const std::string& message)
    : Error(message), key_(std::move(key)), line_(line) {}

std::vector<real> Grid::points() const {
  std::vector<real> out;
  const real span = (stop - start) / step;
  const long count = static_cast<long>(floor(span + real(1e-9))) + 1;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(start + real(i) * step);
  return out;
}

SpecFile SpecFile::parse(std::string_view text, std::string source) {
  SpecFile file;
  file.source_ = std::move(source);
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string content = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (content.empty()) continue;
    const std::string at = file.source_ + ":" + std::to_string(line);
    if (content.front() == '[') {
      if (content.back() != ']') throw SpecError(content, line, at + ": malformed section header '" + content + "'");
      section = trim(std::string_view(content).substr(1, content.size() - 2));
      if (section != "problem" && section != "solver") {
        throw SpecError(section, line, at + ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw SpecError(content, line, at + ": expected 'key = value', got '" + content + "'");
    }
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    const KeyInfo* info = find_key(key);
    if (section.empty()) throw SpecError(key, line, at + ": key '" + key + "' appears before any section");
    if (!info || info->section != section) {
      throw SpecError(key, line, at + ": unknown key '" + key + "' in [" + section + "]");
    }
    if (file.entries_.count(key)) {
      throw SpecError(key, line,
                      at + ": duplicate key '" + key + "' (first set on line " +
                          std::to_string(file.entries_[key].line) + ")");
    }
    if (value.empty()) throw SpecError(key, line, at + ": key '" + key + "' has an empty value");
    file.entries_[key] = Entry{value, line, ""};
  }
  return file;
}

SpecFile SpecFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("", 0, "cannot read spec file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

void SpecFile::set(const std::string& key, std::string value, const std::string& origin) {
  if (!find_key(key)) throw SpecError(key, 0, origin + ": unknown key '" + key + "'");
  entries_[key] = Entry{std::move(value), 0, origin};
}

ResolvedSpec SpecFile::resolve() const {
  std::map<std::string, std::string> values;
  std::map<std::string, std::pair<int, std::string>> origins;
  for (const auto& [key, entry] : entries_) {
    values[key] = entry.value;
    origins[key] = {entry.line, entry.origin};
  }
  const Reader rd(source_, values, origins);

  ResolvedSpec out;
  const std::string mode = values.count("mode") ? values.at("mode") : "explicit";
  if (mode == "explicit") {
    out.mode = Mode::explicit_rhs;
  } else if (mode == "manufactured") {
    out.mode = Mode::manufactured;
  } else {
    rd.fail("mode", "expected 'explicit' or 'manufactured', got '" + mode + "'");
  }

  out.alpha = rd.number("alpha");
  if (!(out.alpha > 1 && out.alpha <= 2)) rd.fail("alpha", "alpha must satisfy 1 < alpha <= 2");
  out.beta = rd.number("beta");
  if (!(out.beta > 0 && out.beta <= 1)) rd.fail("beta", "beta must satisfy 0 < beta <= 1");
  out.theta = rd.number("theta");
  if (!(out.theta > 0 && out.theta < 1)) rd.fail("theta", "theta must satisfy 0 < theta < 1");

  const std::set<std::string> xi_only{"xi"};
  const std::set<std::string> all_vars{"xi", "z", "zp"};
  if (rd.has("a0")) out.a0 = rd.expression("a0", xi_only);
  if (rd.has("a1")) out.a1 = rd.expression("a1", xi_only);
  if (rd.has("a2")) out.a2 = rd.expression("a2", xi_only);

  if (rd.has("exact_coeffs")) {
    std::vector<real> coeffs;
    for (const auto& part : split(rd.text("exact_coeffs"), ',')) {
      try {
        coeffs.push_back(parse_real(part));
      } catch (const std::invalid_argument&) {
        rd.fail("exact_coeffs", "expected comma-separated numbers, got '" + part + "'");
      }
    }
    if (coeffs.size() > static_cast<std::size_t>(kMaxDegree) + 1) {
      rd.fail("exact_coeffs", "more than " + std::to_string(kMaxDegree + 1) + " coefficients");
    }
    out.exact = Polynomial(std::move(coeffs));
  }

  if (out.mode == Mode::explicit_rhs) {
    out.gamma0 = rd.has("gamma0") ? rd.number("gamma0") : real(0);
    out.gamma1 = rd.has("gamma1") ? rd.number("gamma1") : real(0);
    out.gamma2 = rd.has("gamma2") ? rd.number("gamma2") : real(0);
    if (rd.has("nonlinear")) rd.fail("nonlinear", "only used in manufactured mode");
    out.g = rd.expression("g", all_vars);
  } else {
    for (const char* key : {"gamma0", "gamma1", "gamma2"}) {
      if (rd.has(key)) rd.fail(key, "boundary values come from exact_coeffs in manufactured mode");
    }
    if (rd.has("g")) rd.fail("g", "g is built from exact_coeffs in manufactured mode");
    if (!out.exact) rd.text("exact_coeffs");
    if (rd.has("nonlinear")) out.nonlinear = rd.expression("nonlinear", all_vars);
  }

  out.m = rd.integer("m");
  if (out.m < 3 || out.m > kMaxDegree) {
    rd.fail("m", "m must satisfy 3 <= m <= " + std::to_string(kMaxDegree));
  }
  out.n = rd.integer("n");
  if (out.n < 1 || out.n > 100000) rd.fail("n", "n must satisfy 1 <= n <= 100000");
  if (rd.has("node_offset")) out.node_offset = rd.number("node_offset");
  if (!(out.node_offset > 0 && out.node_offset < 1)) rd.fail("node_offset", "node_offset must lie in (0, 1)");
  if (rd.has("gs_tol")) out.gs_tol = rd.number("gs_tol");
  if (!(out.gs_tol > 0 && out.gs_tol < 1)) rd.fail("gs_tol", "gs_tol must lie in (0, 1)");
  if (rd.has("stop_tol")) {
    out.stop_tol = rd.number("stop_tol");
    if (!(*out.stop_tol > 0)) rd.fail("stop_tol", "stop_tol must be positive");
  }
  if (rd.has("grid")) {
    const auto parts = split(rd.text("grid"), ':');
    if (parts.size() != 3) rd.fail("grid", "expected start:stop:step");
    try {
      out.grid = Grid{parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
    } catch (const std::invalid_argument&) {
      rd.fail("grid", "expected numbers in start:stop:step, got '" + rd.text("grid") + "'");
    }
    const Grid& gr = out.grid;
    if (!(gr.start >= 0 && gr.stop <= 1 && gr.start <= gr.stop)) {
      rd.fail("grid", "need 0 <= start <= stop <= 1");
    }
    if (!(gr.step > 0)) rd.fail("grid", "step must be positive");
    if ((gr.stop - gr.start) / gr.step > 100000) rd.fail("grid", "more than 100000 points");
  }

  for (const auto& k : kKeys) {
    const std::string key(k.key);
    if (values.count(key)) {
      out.echo.push_back({std::string(k.section), key, values.at(key)});
    } else if (!k.default_value.empty()) {
      out.echo.push_back({std::string(k.section), key, std::string(k.default_value)});
    }
  }
  // Defaults that do not apply in manufactured mode are left out so the echo re-parses.
  if (out.mode == Mode::manufactured) {
    std::erase_if(out.echo, [](const EchoEntry& e) { return e.key.rfind("gamma", 0) == 0; });
  }
  return out;
}

ProblemSpec ResolvedSpec::problem(std::optional<real> alpha_override, std::optional<real> beta_override) const {
  const FracOrder a(alpha_override.value_or(alpha));
  const FracOrder b(beta_override.value_or(beta));
  auto coefficient = [](const expr::Expr& e) { return [e](const real& xi) { return e(xi); }; };
  if (mode == Mode::manufactured) {
    auto nl = [e = nonlinear](const real& xi, const real& z, const real& zp) { return e(xi, z, zp); };
    return manufacture(*exact, theta, a, b, coefficient(a0), coefficient(a1), coefficient(a2), nl);
  }
  ProblemSpec spec;
  spec.alpha = a;
  spec.beta = b;
  spec.theta = theta;
  spec.gamma0 = gamma0;
  spec.gamma1 = gamma1;
  spec.gamma2 = gamma2;
  spec.a0 = coefficient(a0);
  spec.a1 = coefficient(a1);
  spec.a2 = coefficient(a2);
  spec.g = [e = *g](const real& xi, const real& z, const real& zp) { return e(xi, z, zp); };
  spec.exact = exact;
  return spec;
}

SolverConfig ResolvedSpec::config() const {
  SolverConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.node_offset = node_offset;
  cfg.gs_drop_tol = gs_tol;
  cfg.stop_tol = stop_tol;
  cfg.grid = grid.points();
  return cfg;
}

std::string echo_to_text(const std::vector<EchoEntry>& echo) {
  std::string text;
  std::string section;
  for (const auto& e : echo) {
    if (e.section != section) {
      section = e.section;
      text += "[" + section + "]\n";
    }
    text += e.key + " = " + e.value + "\n";
  }
  return text;
}

}  // namespace lrkm::cli
