#pragma once

// Gamma function and fractional calculus on polynomials.
//
// The Caputo derivative of order alpha, with m = ceil(alpha), is
//
//   D^alpha z(xi) = 1/Gamma(m - alpha) * int_0^xi (xi - s)^(m - alpha - 1) z^(m)(s) ds,
//
// i.e. the Riemann-Liouville integral of order m - alpha of the m-th
// classical derivative.  On monomials it has the closed form
// Gamma(k+1)/Gamma(k+1-alpha) xi^(k-alpha) for k >= m and vanishes for k < m.

#include <functional>
#include <vector>

#include "lrkm/polynomial.hpp"
#include "lrkm/real.hpp"

namespace lrkm {

/// Fractional order in (0, 2].  Orders in (1,2] play the role of alpha and
/// orders in (0,1] the role of beta in the boundary value problem.
class FracOrder {
 public:
  explicit FracOrder(const real& value);

  const real& value() const { return value_; }
  /// ceil(value), either 1 or 2.
  int ceiling() const { return ceiling_; }
  bool is_integer() const { return value_ == ceiling_; }

 private:
  real value_;
  int ceiling_;
};

struct FracTerm {
  real coeff;
  real exponent;

  friend bool operator==(const FracTerm&, const FracTerm&) = default;
};

/// Finite sum of c * xi^p with real exponents p >= 0.
///
/// Normalized on construction: zero coefficients dropped, equal exponents
/// merged, exponents strictly increasing.
class FracSeries {
 public:
  FracSeries() = default;
  explicit FracSeries(std::vector<FracTerm> terms);

  const std::vector<FracTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  real operator()(const real& xi) const;

  FracSeries& operator+=(const FracSeries& rhs);
  friend FracSeries operator+(FracSeries lhs, const FracSeries& rhs) { return lhs += rhs; }
  friend FracSeries operator*(const real& s, const FracSeries& f);

  friend bool operator==(const FracSeries&, const FracSeries&) = default;

 private:
  std::vector<FracTerm> terms_;
};

/// Gamma(x) for x > 0, relative error below 1e-13 on [0.1, 30].
/// Throws DomainError for x <= 0 or non-finite x.
real gamma(const real& x);

/// Caputo derivative of xi^k.
FracSeries caputo_monomial(int k, const FracOrder& alpha);

/// Termwise Caputo derivative of a polynomial.
FracSeries caputo_poly(const Polynomial& p, const FracOrder& alpha);

/// Evaluates the series with 0^0 = 1.  Throws DomainError outside [0,1].
real eval_frac_series(const FracSeries& s, const real& xi);

/// Quadrature value of the Riemann-Liouville integral
/// (1/Gamma(order)) int_0^xi (xi - s)^(order - 1) f(s) ds.
///
/// Substituting s = xi (1 - t^(1/order)) removes the endpoint singularity;
/// the remaining integrand is integrated with Gauss-Legendre panels graded
/// geometrically toward t = 0.  Independent of the closed-form Caputo path and
/// meant for cross-checking it.  Throws DomainError for xi outside (0,1] or
/// order <= 0.
real rl_quadrature_oracle(const std::function<real(const real&)>& f, const real& order,
                          const real& xi);

}  // namespace lrkm
