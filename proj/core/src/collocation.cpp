#include <algorithm>
#include <string>

#include "lrkm/error.hpp"
#include "lrkm/solver.hpp"

namespace lrkm {

namespace {

// Nodes closer than this to theta trigger a warning.
constexpr double kNodeThetaTol = 1e-12;

std::string node_list(std::span<const real> nodes) {
  std::string s;
  for (const auto& x : nodes) {
    if (!s.empty()) s += ", ";
    s += format_fixed(x, 6);
  }
  return s;
}

}  // namespace

CollocationSystem build_system(const ProblemSpec& spec0, const SolverConfig& cfg) {
  spec0.validate();
  cfg.validate();
  if (spec0.gamma0 != 0 || spec0.gamma1 != 0 || spec0.gamma2 != 0) {
    throw DomainError("build_system: boundary values must be zero; homogenize first");
  }

  KernelBasis kb = kernel_threepoint(cfg.m, spec0.theta, cfg.gs_drop_tol);
  std::vector<real> nodes = cfg.nodes();

  std::vector<std::string> warnings;
  bool leading_present = false;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (abs(nodes[j] - spec0.theta) < real(kNodeThetaTol)) {
      warnings.push_back("node " + std::to_string(j) + " coincides with theta");
    }
    if (spec0.a2(nodes[j]) != 0) leading_present = true;
  }
  if (!leading_present) {
    throw DomainError("build_system: a2 vanishes at every node (" + node_list(nodes) + ")");
  }

  // Caputo images of every kernel member in its first argument.
  std::vector<FracSeries> d_alpha;
  std::vector<FracSeries> d_beta;
  for (const auto& h : kb.members()) {
    d_alpha.push_back(caputo_poly(h, spec0.alpha));
    d_beta.push_back(caputo_poly(h, spec0.beta));
  }

  std::vector<Polynomial> psi;
  psi.reserve(nodes.size());
  for (const auto& x : nodes) {
    const real c2 = spec0.a2(x);
    const real c1 = spec0.a1(x);
    const real c0 = spec0.a0(x);
    Polynomial p;
    for (std::size_t i = 0; i < kb.size(); ++i) {
      const real lh = c2 * d_alpha[i](x) + c1 * d_beta[i](x) + c0 * kb.members()[i](x);
      p += lh * kb.members()[i];
    }
    psi.push_back(std::move(p));
  }

  Orthonormalization gs;
  try {
    gs = gram_schmidt(psi, cfg.gs_drop_tol);
  } catch (const DegenerateError&) {
    throw DegenerateError("build_system: the operator annihilates the space at nodes (" +
                          node_list(nodes) + ")");
  }

  return CollocationSystem{std::move(kb),          std::move(nodes),   std::move(psi),
                           std::move(gs.orthonormal), std::move(gs.coeffs), std::move(gs.kept),
                           std::move(gs.dropped),  std::move(warnings)};
}

Polynomial linear_solve(const CollocationSystem& sys, std::span<const real> rhs_values) {
  if (rhs_values.size() != sys.nodes.size()) {
    throw DomainError("linear_solve: expected one right-hand-side value per node");
  }
  Polynomial z;
  for (std::size_t j = 0; j < sys.psibar.size(); ++j) {
    real coeff = 0;
    for (std::size_t k = 0; k <= j; ++k) coeff += sys.beta_coeffs[j][k] * rhs_values[sys.kept[k]];
    z += coeff * sys.psibar[j];
  }
  return z;
}

SolveReport iterate(const CollocationSystem& sys, const ProblemSpec& spec0, const SolverConfig& cfg,
                    const Polynomial& start) {
  SolveReport report;
  report.config = cfg;
  report.nodes = sys.nodes;
  report.kept = sys.kept;
  report.dropped = sys.dropped;
  report.warnings = sys.warnings;

  Polynomial z = start;
  std::vector<real> rhs(sys.nodes.size(), real(0));
  for (int it = 1; it <= cfg.n; ++it) {
    const Polynomial dz = diff_poly(z);
    for (const auto k : sys.kept) {
      const real& x = sys.nodes[k];
      auto where = [&] { return " at node " + format_fixed(x, 6) + " in iteration " + std::to_string(it); };
      try {
        rhs[k] = spec0.g(x, z(x), dz(x));
      } catch (const Error& e) {
        throw NumericalError("evaluating g" + where() + ": " + e.what());
      }
      if (!isfinite(rhs[k])) throw NumericalError("g is not finite" + where());
    }
    Polynomial next = linear_solve(sys, rhs);

    real delta = 0;
    for (const auto& x : cfg.grid) delta = std::max(delta, real(abs(next(x) - z(x))));
    report.iterates_delta.push_back(delta);
    report.iterations = it;
    z = std::move(next);
    if (cfg.stop_tol && delta <= *cfg.stop_tol) {
      report.stopped_early = it < cfg.n;
      break;
    }
  }
  report.solution = std::move(z);
  return report;
}

SolveReport iterate(const ProblemSpec& spec0, const SolverConfig& cfg, const Polynomial& start) {
  return iterate(build_system(spec0, cfg), spec0, cfg, start);
}

SolveReport solve(const ProblemSpec& spec, const SolverConfig& cfg) {
  const Homogenized h = homogenize(spec);
  SolveReport report = iterate(h.spec, cfg);
  report.shift = h.shift;
  if (spec.exact) report.errors = error_grid(report, *spec.exact, cfg.grid);
  return report;
}

}  // namespace lrkm
