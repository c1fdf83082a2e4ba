#include <string>

#include "lrkm/error.hpp"
#include "lrkm/rkhs.hpp"

namespace lrkm {

namespace {

void require_unit_interval(const real& v, const char* what) {
  if (!(v >= 0 && v <= 1)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

KernelBasis::KernelBasis(std::vector<Polynomial> h, int m, std::optional<real> theta)
    : h_(std::move(h)), m_(m), theta_(std::move(theta)) {}

KernelBasis kernel_0w(int m, const real& drop_tol) {
  const BasisSet phi = phi_basis(m);
  auto gs = gram_schmidt(phi.members, drop_tol);
  return KernelBasis(std::move(gs.orthonormal), m);
}

KernelBasis kernel_threepoint(int m, const real& theta, const real& drop_tol) {
  if (m < 3) throw DomainError("kernel_threepoint: m must be at least 3");
  if (!(theta > 0 && theta < 1)) throw DomainError("kernel_threepoint: theta must lie in (0, 1)");

  const KernelBasis base = kernel_0w(m, drop_tol);
  const Polynomial r_theta = kernel_section(base, theta);
  const real r_theta_theta = r_theta(theta);
  if (!(r_theta_theta >= real(kDegenerateKernelTol))) {
    throw DegenerateError("kernel_threepoint: R_theta(theta) = " + format_sci(r_theta_theta, 3) +
                          " is numerically zero");
  }

  // Rank-one correction h_j - h_j(theta) R_theta / R_theta(theta).  The m - 1
  // corrected members satisfy sum_j h_j(theta) c_j = 0, so the one with the
  // largest |h_j(theta)| is redundant and is left out; each remaining member
  // keeps norm >= 1/sqrt(2) and no cancellation-sized vector reaches
  // Gram-Schmidt.
  std::size_t redundant = 0;
  for (std::size_t j = 1; j < base.size(); ++j) {
    if (abs(base.members()[j](theta)) > abs(base.members()[redundant](theta))) redundant = j;
  }
  std::vector<Polynomial> corrected;
  corrected.reserve(base.size() - 1);
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (j == redundant) continue;
    const Polynomial& h = base.members()[j];
    corrected.push_back(h - (h(theta) / r_theta_theta) * r_theta);
  }
  auto gs = gram_schmidt(corrected, drop_tol);
  if (gs.orthonormal.size() != static_cast<std::size_t>(m - 2)) {
    throw DegenerateError("kernel_threepoint: expected " + std::to_string(m - 2) + " members, got " +
                          std::to_string(gs.orthonormal.size()));
  }
  return KernelBasis(std::move(gs.orthonormal), m, theta);
}

real kernel_eval(const KernelBasis& kb, const real& x, const real& xi) {
  require_unit_interval(x, "kernel_eval: x");
  require_unit_interval(xi, "kernel_eval: xi");
  real acc = 0;
  for (const auto& h : kb.members()) acc += h(x) * h(xi);
  return acc;
}

Polynomial kernel_section(const KernelBasis& kb, const real& x) {
  require_unit_interval(x, "kernel_section: x");
  Polynomial section;
  for (const auto& h : kb.members()) section += h(x) * h;
  return section;
}

real verify_reproducing(const KernelBasis& kb, const Polynomial& p, const real& x) {
  return abs(inner(p, kernel_section(kb, x)) - p(x));
}

}  // namespace lrkm
