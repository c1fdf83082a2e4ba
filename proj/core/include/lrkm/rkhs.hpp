#pragma once

// Reproducing kernels of the polynomial spaces
//
//   0W^m      = { z : deg z <= m, z(0) = z(1) = 0 }
//   thetaW^m  = { z in 0W^m : z(theta) = 0 }
//
// under the L2(0,1) inner product.  A kernel is carried by an orthonormal
// basis {h_j} of its space; R(x, xi) = sum_j h_j(x) h_j(xi).

#include <optional>
#include <vector>

#include "lrkm/polynomial.hpp"
#include "lrkm/real.hpp"

namespace lrkm {

/// Threshold below which R_theta(theta) is treated as zero.
inline constexpr double kDegenerateKernelTol = 1e-14;

class KernelBasis {
 public:
  KernelBasis(std::vector<Polynomial> h, int m, std::optional<real> theta = std::nullopt);

  const std::vector<Polynomial>& members() const { return h_; }
  std::size_t size() const { return h_.size(); }
  int m() const { return m_; }
  const std::optional<real>& theta() const { return theta_; }

 private:
  std::vector<Polynomial> h_;
  int m_;
  std::optional<real> theta_;
};

/// Kernel of 0W^m: Gram-Schmidt of phi_2..phi_m, m - 1 members.
KernelBasis kernel_0w(int m, const real& drop_tol = real(kDefaultDropTol));

/// Kernel of thetaW^m, R(x,xi) - R(x,theta) R(theta,xi) / R(theta,theta).
///
/// Stored as an orthonormal basis with m - 2 members, obtained by
/// orthonormalizing h_j - h_j(theta) R_theta / R_theta(theta) over every j
/// except the one with the largest |h_j(theta)|, which is redundant.  Throws
/// DegenerateError when R_theta(theta) < kDegenerateKernelTol and DomainError
/// for m < 3 or theta outside (0,1).
KernelBasis kernel_threepoint(int m, const real& theta, const real& drop_tol = real(kDefaultDropTol));

/// sum_j h_j(x) h_j(xi).  Throws DomainError outside [0,1].
real kernel_eval(const KernelBasis& kb, const real& x, const real& xi);

/// The polynomial xi -> R(x, xi).
Polynomial kernel_section(const KernelBasis& kb, const real& x);

/// |<p, R(., x)> - p(x)|; meaningful when p lies in the kernel's space.
real verify_reproducing(const KernelBasis& kb, const Polynomial& p, const real& x);

}  // namespace lrkm
