#include <array>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "lrkm/error.hpp"
#include "lrkm/fracops.hpp"

namespace lrkm {

namespace {

constexpr int kGaussPoints = 20;
constexpr int kGradedLevels = 60;

struct GaussRule {
  std::array<real, kGaussPoints> nodes;    // on [-1, 1]
  std::array<real, kGaussPoints> weights;
};

GaussRule make_gauss_rule() {
  GaussRule rule;
  const int n = kGaussPoints;
  for (int i = 0; i < n; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    real x = cos(pi() * (i + real(0.75)) / (n + real(0.5)));
    real dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      real p0 = 1;
      real p1 = x;
      for (int k = 2; k <= n; ++k) {
        const real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::exchange(p1, p2);
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < std::numeric_limits<real>::epsilon()) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

}  // namespace

real rl_quadrature_oracle(const std::function<real(const real&)>& f, const real& order,
                          const real& xi) {
  if (!(order > 0)) throw DomainError("rl_quadrature_oracle: order must be positive");
  if (!(xi > 0 && xi <= 1)) throw DomainError("rl_quadrature_oracle: xi must lie in (0, 1]");

  // J^a f(xi) = xi^a / Gamma(a + 1) * int_0^1 f(xi (1 - t^(1/a))) dt.
  const real inv_order = real(1) / order;
  const auto integrand = [&](const real& t) { return f(xi * (1 - pow(t, inv_order))); };

  const GaussRule& rule = gauss_rule();
  real total = 0;
  real hi = 1;
  for (int level = 0; level < kGradedLevels; ++level) {
    const real lo = level + 1 == kGradedLevels ? real(0) : hi / 2;
    const real half = (hi - lo) / 2;
    const real mid = (hi + lo) / 2;
    real panel = 0;
    for (int i = 0; i < kGaussPoints; ++i) panel += rule.weights[i] * integrand(mid + half * rule.nodes[i]);
    total += half * panel;
    hi = lo;
  }
  // std::tgamma keeps the oracle independent of lrkm::gamma.
  return pow(xi, order) / real(std::tgamma(to_double(order) + 1)) * total;
}

}  // namespace lrkm
