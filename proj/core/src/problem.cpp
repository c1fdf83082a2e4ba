#include <memory>
#include <string>

#include "lrkm/error.hpp"
#include "lrkm/solver.hpp"

namespace lrkm {

void ProblemSpec::validate() const {
  if (!(alpha.value() > 1 && alpha.value() <= 2)) throw DomainError("alpha must satisfy 1 < alpha <= 2");
  if (!(beta.value() > 0 && beta.value() <= 1)) throw DomainError("beta must satisfy 0 < beta <= 1");
  if (!(theta > 0 && theta < 1)) throw DomainError("theta must satisfy 0 < theta < 1");
  if (!a0 || !a1 || !a2 || !g) throw DomainError("coefficient functions a0, a1, a2 and g must be set");
}

std::vector<real> default_grid() {
  std::vector<real> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(real(i) / 10);
  return grid;
}

std::vector<real> SolverConfig::nodes() const {
  std::vector<real> out;
  for (int j = 0; j <= m - 2; ++j) out.push_back((j + node_offset) / m);
  return out;
}

void SolverConfig::validate() const {
  if (m < 3) throw DomainError("m must be at least 3");
  if (m > kMaxDegree) throw DomainError("m exceeds the polynomial degree cap");
  if (n < 1) throw DomainError("n must be at least 1");
  if (!(node_offset > 0 && node_offset < 1)) throw DomainError("node_offset must lie in (0, 1)");
  if (!(gs_drop_tol > 0)) throw DomainError("gs_drop_tol must be positive");
  if (stop_tol && !(*stop_tol > 0)) throw DomainError("stop_tol must be positive");
  if (grid.empty()) throw DomainError("grid must not be empty");
  for (const auto& x : grid) {
    if (!(x >= 0 && x <= 1)) throw DomainError("grid points must lie in [0, 1]");
  }
}

Homogenized homogenize(const ProblemSpec& spec) {
  spec.validate();
  const real& t = spec.theta;
  if (spec.gamma0 == 0 && spec.gamma1 == 0 && spec.gamma2 == 0) return {spec, Polynomial{}};

  // Lagrange basis on the nodes {0, theta, 1}.
  const Polynomial l0 = Polynomial{-t, real(1)} * Polynomial{real(-1), real(1)} * (real(1) / t);
  const Polynomial l1 = Polynomial{real(0), real(1)} * Polynomial{real(-1), real(1)} * (real(1) / (t * (t - 1)));
  const Polynomial l2 = Polynomial{real(0), real(1)} * Polynomial{-t, real(1)} * (real(1) / (1 - t));
  const Polynomial q = spec.gamma0 * l0 + spec.gamma1 * l1 + spec.gamma2 * l2;

  struct ShiftTerms {
    Polynomial q;
    Polynomial dq;
    FracSeries d_alpha;
    FracSeries d_beta;
  };
  auto terms = std::make_shared<const ShiftTerms>(
      ShiftTerms{q, diff_poly(q), caputo_poly(q, spec.alpha), caputo_poly(q, spec.beta)});

  ProblemSpec out = spec;
  out.gamma0 = out.gamma1 = out.gamma2 = 0;
  out.g = [g = spec.g, a0 = spec.a0, a1 = spec.a1, a2 = spec.a2, terms](
              const real& xi, const real& w, const real& wp) {
    const real lq = a2(xi) * terms->d_alpha(xi) + a1(xi) * terms->d_beta(xi) + a0(xi) * terms->q(xi);
    return g(xi, w + terms->q(xi), wp + terms->dq(xi)) - lq;
  };
  if (spec.exact) out.exact = *spec.exact - q;
  return {std::move(out), q};
}

ProblemSpec manufacture(const Polynomial& exact, const real& theta, const FracOrder& alpha,
                        const FracOrder& beta, CoefficientFn a0, CoefficientFn a1, CoefficientFn a2,
                        RhsFn nonlinear) {
  if (!(theta > 0 && theta < 1)) throw DomainError("manufacture: theta must lie in (0, 1)");
  if (!a0 || !a1 || !a2 || !nonlinear) throw DomainError("manufacture: every function must be set");

  struct Forcing {
    Polynomial z;
    Polynomial dz;
    FracSeries d_alpha;
    FracSeries d_beta;
  };
  auto f = std::make_shared<const Forcing>(
      Forcing{exact, diff_poly(exact), caputo_poly(exact, alpha), caputo_poly(exact, beta)});

  ProblemSpec spec;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.theta = theta;
  spec.gamma0 = exact(real(0));
  spec.gamma1 = exact(theta);
  spec.gamma2 = exact(real(1));
  spec.g = [f, a0, a1, a2, nonlinear](const real& xi, const real& z, const real& zp) {
    const real z_exact = f->z(xi);
    const real forcing = a2(xi) * f->d_alpha(xi) + a1(xi) * f->d_beta(xi) + a0(xi) * z_exact +
                         nonlinear(xi, z_exact, f->dz(xi));
    return forcing - nonlinear(xi, z, zp);
  };
  spec.a0 = std::move(a0);
  spec.a1 = std::move(a1);
  spec.a2 = std::move(a2);
  spec.exact = exact;
  spec.validate();
  return spec;
}

std::vector<ErrorRow> error_grid(const SolveReport& report, const Polynomial& exact,
                                 std::span<const real> grid) {
  const Polynomial approx = report.approximation();
  std::vector<ErrorRow> rows;
  rows.reserve(grid.size());
  for (const auto& x : grid) {
    const real e = exact(x);
    const real a = approx(x);
    rows.push_back({x, e, a, abs(a - e)});
  }
  return rows;
}

}  // namespace lrkm
