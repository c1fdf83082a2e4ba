#pragma once

// Problem-specification files.
//
//   # comment
//   [problem]
//   alpha = 1.75
//   theta = 0.5
//   mode  = manufactured
//   exact_coeffs = 0, 0.5, -1.5, 1
//   nonlinear = -z^2
//   [solver]
//   m = 5
//   n = 9
//
// The full key list and defaults are in docs/spec-file.md.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lrkm/error.hpp"
#include "lrkm/expr.hpp"
#include "lrkm/solver.hpp"

namespace lrkm::cli {

/// Syntax or validation error.  line() is 0 for values that came from the
/// command line or from a default.
class SpecError : public Error {
 public:
  SpecError(std::string key, int line, const std::string& message);

  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  std::string key_;
  int line_;
};

enum class Mode { explicit_rhs, manufactured };

struct Grid {
  real start = 0;
  real stop = 1;
  real step = real(1) / 10;

  std::vector<real> points() const;
};

struct EchoEntry {
  std::string section;
  std::string key;
  std::string value;

  friend bool operator==(const EchoEntry&, const EchoEntry&) = default;
};

/// Fully typed and validated contents of a spec file.
struct ResolvedSpec {
  real alpha;
  real beta;
  real theta;
  real gamma0 = 0;
  real gamma1 = 0;
  real gamma2 = 0;
  expr::Expr a0 = expr::parse("0");
  expr::Expr a1 = expr::parse("0");
  expr::Expr a2 = expr::parse("1");
  Mode mode = Mode::explicit_rhs;
  std::optional<expr::Expr> g;
  std::optional<Polynomial> exact;
  expr::Expr nonlinear = expr::parse("0");

  int m = 0;
  int n = 0;
  real node_offset = real(3) / 10;
  real gs_tol = real(kDefaultDropTol);
  std::optional<real> stop_tol;
  Grid grid;

  /// Effective value of every key, defaults included, in canonical order.
  std::vector<EchoEntry> echo;

  /// The problem with alpha and beta optionally replaced (sweeps).
  ProblemSpec problem(std::optional<real> alpha_override = std::nullopt,
                      std::optional<real> beta_override = std::nullopt) const;
  SolverConfig config() const;
};

class SpecFile {
 public:
  static SpecFile parse(std::string_view text, std::string source = "<spec>");
  static SpecFile load(const std::filesystem::path& path);

  /// Replaces (or adds) a value as if it had been written in the file.
  /// `origin` names the flag in error messages.
  void set(const std::string& key, std::string value, const std::string& origin);

  /// Checks every key and builds the typed form.  Throws SpecError.
  ResolvedSpec resolve() const;

  const std::string& source() const { return source_; }

 private:
  struct Entry {
    std::string value;
    int line = 0;
    std::string origin;  // set for command-line values
  };

  std::string source_;
  std::map<std::string, Entry> entries_;
};

/// Spec-file text equivalent to an echo.
std::string echo_to_text(const std::vector<EchoEntry>& echo);

}  // namespace lrkm::cli
