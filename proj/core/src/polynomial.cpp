#include "lrkm/polynomial.hpp"

#include <algorithm>
#include <string>

#include "lrkm/error.hpp"

namespace lrkm {

Polynomial::Polynomial(std::vector<real> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<real> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::monomial(int k, const real& c) {
  if (k < 0) throw DomainError("monomial degree must be non-negative");
  std::vector<real> coeffs(static_cast<std::size_t>(k) + 1, real(0));
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (degree() > kMaxDegree) {
    throw DomainError("polynomial degree " + std::to_string(degree()) +
                      " exceeds the cap of " + std::to_string(kMaxDegree));
  }
}

real Polynomial::operator()(const real& xi) const {
  real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), real(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), real(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const real& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<real> out(a.coeffs_.size() + b.coeffs_.size() - 1, real(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

real eval_poly(const Polynomial& p, const real& xi) { return p(xi); }

Polynomial diff_poly(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<real> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<int>(i);
  return Polynomial(std::move(d));
}

real inner(const Polynomial& p, const Polynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  real total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    real row = 0;
    for (std::size_t j = 0; j < b.size(); ++j) row += b[j] / static_cast<int>(i + j + 1);
    total += a[i] * row;
  }
  return total;
}

real norm(const Polynomial& p) { return sqrt(inner(p, p)); }

Polynomial shifted_legendre(int n) {
  if (n < 0) throw DomainError("shifted_legendre: n must be non-negative");
  if (n > kMaxDegree) {
    throw DomainError("shifted_legendre: n = " + std::to_string(n) + " exceeds the degree cap");
  }
  const Polynomial two_xi_minus_one{real(-1), real(2)};
  Polynomial prev{real(1)};
  if (n == 0) return prev;
  Polynomial cur = two_xi_minus_one;
  for (int k = 1; k < n; ++k) {
    // Divide rather than scale by 1/(k+1) so integer coefficients stay exact.
    std::vector<real> next = (real(2 * k + 1) * (two_xi_minus_one * cur) - real(k) * prev).coeffs();
    for (auto& c : next) c /= (k + 1);
    prev = std::move(cur);
    cur = Polynomial(std::move(next));
  }
  return cur;
}

BasisSet phi_basis(int m) {
  if (m < 2) throw DomainError("phi_basis: m must be at least 2");
  BasisSet basis;
  basis.m = m;
  const Polynomial p0 = shifted_legendre(0);
  const Polynomial p1 = shifted_legendre(1);
  for (int j = 2; j <= m; ++j) {
    basis.members.push_back(shifted_legendre(j) - (j % 2 == 0 ? p0 : p1));
  }
  return basis;
}

}  // namespace lrkm
