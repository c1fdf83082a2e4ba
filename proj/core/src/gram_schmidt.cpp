#include <vector>

#include "lrkm/error.hpp"
#include "lrkm/polynomial.hpp"

namespace lrkm {

Orthonormalization gram_schmidt(std::span<const Polynomial> vs, const real& drop_tol) {
  if (!(drop_tol > 0)) throw DomainError("gram_schmidt: drop_tol must be positive");

  const std::size_t n = vs.size();
  Orthonormalization out;
  // Expansion of each accepted vector over all inputs; compressed to kept
  // columns at the end.
  std::vector<std::vector<real>> expansion;

  for (std::size_t idx = 0; idx < n; ++idx) {
    Polynomial v = vs[idx];
    const real norm_before = norm(v);
    if (norm_before == 0) {
      out.dropped.push_back(idx);
      continue;
    }
    std::vector<real> c(n, real(0));
    c[idx] = 1;

    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < out.orthonormal.size(); ++j) {
        const real r = inner(v, out.orthonormal[j]);
        v -= r * out.orthonormal[j];
        for (std::size_t k = 0; k < n; ++k) c[k] -= r * expansion[j][k];
      }
    }

    const real norm_after = norm(v);
    if (norm_after <= drop_tol * norm_before) {
      out.dropped.push_back(idx);
      continue;
    }
    const real inv = real(1) / norm_after;
    v *= inv;
    for (auto& ck : c) ck *= inv;
    out.orthonormal.push_back(std::move(v));
    expansion.push_back(std::move(c));
    out.kept.push_back(idx);
  }

  if (out.orthonormal.empty()) {
    throw DegenerateError("gram_schmidt: every input vector was dropped");
  }

  out.coeffs.resize(out.orthonormal.size());
  for (std::size_t j = 0; j < out.orthonormal.size(); ++j) {
    out.coeffs[j].resize(j + 1);
    for (std::size_t k = 0; k <= j; ++k) out.coeffs[j][k] = expansion[j][out.kept[k]];
  }
  return out;
}

}  // namespace lrkm
