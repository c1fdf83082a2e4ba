#pragma once

#include <algorithm>
#include <string>

#include "lrkm/lrkm.hpp"

namespace testing_support {

inline long double ld(const lrkm::real& v) { return static_cast<long double>(v); }
inline lrkm::real r(const char* text) { return lrkm::parse_real(text); }

// xi (xi - theta) (xi - 1) as a Polynomial.
inline lrkm::Polynomial cubic_bubble(const lrkm::real& theta) {
  using lrkm::Polynomial;
  using lrkm::real;
  return Polynomial{real(0), real(1)} * Polynomial{-theta, real(1)} * Polynomial{real(-1), real(1)};
}

// D^a z + (xi + 1) D^b z + xi z - z^2 = f with z = xi (xi - 1/2) (xi - 1).
inline lrkm::ProblemSpec square_problem(const lrkm::real& alpha, const lrkm::real& beta) {
  using lrkm::real;
  return lrkm::manufacture(
      cubic_bubble(real(1) / 2), real(1) / 2, lrkm::FracOrder(alpha), lrkm::FracOrder(beta),
      [](const real& x) { return x; }, [](const real& x) { return x + 1; }, [](const real&) { return real(1); },
      [](const real&, const real& z, const real&) { return -z * z; });
}

// xi^2 D^a z + (xi^2 - 1) D^b z + xi^3 z - z z' - z^3 = f with z = xi (xi - 3/5) (xi - 1).
inline lrkm::ProblemSpec cubic_problem(const lrkm::real& alpha, const lrkm::real& beta) {
  using lrkm::real;
  return lrkm::manufacture(
      cubic_bubble(real(3) / 5), real(3) / 5, lrkm::FracOrder(alpha), lrkm::FracOrder(beta),
      [](const real& x) { return x * x * x; }, [](const real& x) { return x * x - 1; },
      [](const real& x) { return x * x; },
      [](const real&, const real& z, const real& zp) { return -z * zp - z * z * z; });
}

inline lrkm::real max_abs_error(const lrkm::SolveReport& rep) {
  lrkm::real worst = 0;
  for (const auto& row : *rep.errors) worst = std::max(worst, row.abs_error);
  return worst;
}

}  // namespace testing_support

namespace testing_support {

// Agreement expected between two exact computations carried out in the
// working precision: with room for the growth of monomial coefficients near m = 8.
inline constexpr long double kTight = lrkm::kRealDigits10 >= 30 ? 1e-22L : lrkm::kRealDigits10 >= 18 ? 1e-12L : 1e-9L;

}  // namespace testing_support
