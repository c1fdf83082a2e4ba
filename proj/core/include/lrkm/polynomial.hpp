#pragma once

// Polynomial algebra on [0,1], shifted Legendre polynomials, the boundary
// adapted basis phi_j and Gram-Schmidt under the L2(0,1) inner product.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lrkm/real.hpp"

namespace lrkm {

/// Largest degree a Polynomial may carry.
inline constexpr int kMaxDegree = 64;

/// Relative norm below which Gram-Schmidt treats a vector as dependent.
inline constexpr double kDefaultDropTol = 1e-12;

/// Dense polynomial in ascending monomial order: coeffs()[i] multiplies xi^i.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.  Construction throws DomainError when the
/// degree would exceed kMaxDegree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<real> coeffs);
  Polynomial(std::initializer_list<real> coeffs);

  static Polynomial monomial(int k, const real& c = real(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<real>& coeffs() const { return coeffs_; }

  /// Coefficient of xi^i; zero beyond the degree.
  real operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : real(0); }

  /// Horner evaluation.
  real operator()(const real& xi) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const real& s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, const real& s) { return p *= s; }
  friend Polynomial operator*(const real& s, Polynomial p) { return p *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= real(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<real> coeffs_;
};

real eval_poly(const Polynomial& p, const real& xi);

/// Classical first derivative.
Polynomial diff_poly(const Polynomial& p);

/// Exact L2(0,1) inner product from coefficients, sum of c_i d_j / (i + j + 1).
real inner(const Polynomial& p, const Polynomial& q);

real norm(const Polynomial& p);

/// Shifted Legendre polynomial P_n on [0,1] from the three-term recurrence
/// (n+1) P_{n+1} = (2n+1)(2 xi - 1) P_n - n P_{n-1}.
Polynomial shifted_legendre(int n);

/// Boundary-adapted family {phi_j}, j = 2..m, each vanishing at 0 and 1.
struct BasisSet {
  std::vector<Polynomial> members;
  int m = 0;
};

/// phi_j = P_j - P_0 for even j and P_j - P_1 for odd j.
BasisSet phi_basis(int m);

/// Result of gram_schmidt().
///
/// orthonormal[j] == sum_k coeffs[j][k] * vs[kept[k]] for k <= j, which is the
/// lower-triangular expansion the collocation solver sums over.
struct Orthonormalization {
  std::vector<Polynomial> orthonormal;
  std::vector<std::vector<real>> coeffs;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
};

/// Modified Gram-Schmidt with one reorthogonalization pass.
///
/// A vector whose norm after projection falls to drop_tol times its norm
/// before projection is dropped; earlier vectors win.  Throws DegenerateError
/// if nothing survives and DomainError if drop_tol is not positive.
Orthonormalization gram_schmidt(std::span<const Polynomial> vs,
                                const real& drop_tol = real(kDefaultDropTol));

}  // namespace lrkm
