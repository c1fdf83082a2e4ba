#pragma once

// Collocation solver for
//
//   a2(xi) D^alpha z + a1(xi) D^beta z + a0(xi) z = g(xi, z, z'),   xi in [0,1]
//   z(0) = gamma0,  z(theta) = gamma1,  z(1) = gamma2
//
// with Caputo derivatives, 1 < alpha <= 2 and 0 < beta <= 1.
//
// After homogenization the unknown lives in thetaW^m.  With nodes
// xi_j = (j + offset)/m, j = 0..m-2, the functions
//
//   psi_j(xi) = L_x R(x, xi) at x = xi_j = sum_i (L h_i)(xi_j) h_i(xi)
//
// satisfy <z, psi_j> = (Lz)(xi_j) for every z in thetaW^m.  Orthonormalizing
// psi gives psibar_j = sum_k beta_jk psi_k, and the collocation solution is
//
//   z = sum_j (sum_k beta_jk g(xi_k)) psibar_j.
//
// Nonlinear g is handled by the lagged iteration z_n = solve(g(., z_{n-1}, z'_{n-1}))
// starting from z_0 = 0.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrkm/fracops.hpp"
#include "lrkm/polynomial.hpp"
#include "lrkm/real.hpp"
#include "lrkm/rkhs.hpp"

namespace lrkm {

using CoefficientFn = std::function<real(const real& xi)>;
using RhsFn = std::function<real(const real& xi, const real& z, const real& zp)>;

struct ProblemSpec {
  FracOrder alpha{real(2)};
  FracOrder beta{real(1)};
  real theta = real(0.5);
  real gamma0 = 0;
  real gamma1 = 0;
  real gamma2 = 0;
  CoefficientFn a0;
  CoefficientFn a1;
  CoefficientFn a2;
  RhsFn g;
  /// Known solution of the original (not homogenized) problem, if any.
  std::optional<Polynomial> exact;

  /// Throws DomainError unless 1 < alpha <= 2, 0 < beta <= 1, 0 < theta < 1
  /// and every function is set.
  void validate() const;
};

/// Evaluation grid {0, 0.1, ..., 1}.
std::vector<real> default_grid();

struct SolverConfig {
  int m = 5;
  int n = 1;
  real node_offset = real(3) / 10;
  real gs_drop_tol = real(kDefaultDropTol);
  std::optional<real> stop_tol;
  std::vector<real> grid = default_grid();

  /// xi_j = (j + node_offset)/m for j = 0..m-2.
  std::vector<real> nodes() const;
  void validate() const;
};

struct Homogenized {
  ProblemSpec spec;
  /// Quadratic through (0, gamma0), (theta, gamma1), (1, gamma2).
  Polynomial shift;
};

/// Rewrites the problem for w = z - q with q the boundary interpolant:
/// g0(xi, w, wp) = g(xi, w + q, wp + q') - (L q)(xi) and zero boundary values.
Homogenized homogenize(const ProblemSpec& spec);

struct CollocationSystem {
  KernelBasis kb;
  std::vector<real> nodes;
  std::vector<Polynomial> psi;
  std::vector<Polynomial> psibar;
  /// beta_coeffs[j][k] multiplies psi[kept[k]], k <= j.
  std::vector<std::vector<real>> beta_coeffs;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
  std::vector<std::string> warnings;
};

/// Builds psi and its orthonormalization for a homogenized problem.
/// Throws DomainError when a2 vanishes at every node or the boundary values
/// are not zero, and DegenerateError when every psi is dropped.
CollocationSystem build_system(const ProblemSpec& spec0, const SolverConfig& cfg);

/// sum_j (sum_k beta_jk rhs[kept[k]]) psibar_j.  rhs_values is indexed by node.
Polynomial linear_solve(const CollocationSystem& sys, std::span<const real> rhs_values);

struct ErrorRow {
  real x;
  real exact;
  real approx;
  real abs_error;
};

struct SolveReport {
  /// Final iterate in the homogenized variable.
  Polynomial solution;
  /// Boundary interpolant; the solution of the original problem is solution + shift.
  Polynomial shift;
  /// max over the grid of |z_n - z_{n-1}|, one entry per iteration.
  std::vector<real> iterates_delta;
  int iterations = 0;
  bool stopped_early = false;
  std::vector<real> nodes;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
  std::vector<std::string> warnings;
  SolverConfig config;
  std::optional<std::vector<ErrorRow>> errors;

  Polynomial approximation() const { return solution + shift; }
};

/// Lagged iteration on a prebuilt system.  `start` is z_{m,0}.
/// Throws NumericalError if g is not finite at a node.
SolveReport iterate(const CollocationSystem& sys, const ProblemSpec& spec0, const SolverConfig& cfg,
                    const Polynomial& start = {});

SolveReport iterate(const ProblemSpec& spec0, const SolverConfig& cfg, const Polynomial& start = {});

/// homogenize, build_system, iterate, and the error grid when spec.exact is set.
SolveReport solve(const ProblemSpec& spec, const SolverConfig& cfg);

/// Problem whose solution is `exact`.
///
/// The equation is a2 D^alpha z + a1 D^beta z + a0 z + nonlinear(xi, z, z') = f,
/// so `nonlinear` is the nonlinear part of the left-hand side.  f is formed
/// from the closed-form Caputo derivatives of `exact`; the returned g is
/// f - nonlinear.  Boundary values are taken from `exact`.
ProblemSpec manufacture(const Polynomial& exact, const real& theta, const FracOrder& alpha,
                        const FracOrder& beta, CoefficientFn a0, CoefficientFn a1, CoefficientFn a2,
                        RhsFn nonlinear);

/// Rows (x, exact, approx, |approx - exact|) with approx = solution + shift.
std::vector<ErrorRow> error_grid(const SolveReport& report, const Polynomial& exact,
                                 std::span<const real> grid);

}  // namespace lrkm
