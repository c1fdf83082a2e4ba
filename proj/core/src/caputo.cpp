#include <algorithm>

#include "lrkm/error.hpp"
#include "lrkm/fracops.hpp"

namespace lrkm {

FracOrder::FracOrder(const real& value) : value_(value), ceiling_(0) {
  if (!isfinite(value) || !(value > 0) || value > 2) {
    throw DomainError("fractional order must lie in (0, 2]");
  }
  ceiling_ = value <= 1 ? 1 : 2;
}

FracSeries::FracSeries(std::vector<FracTerm> terms) {
  for (const auto& t : terms) {
    if (!isfinite(t.exponent) || t.exponent < 0) {
      throw DomainError("FracSeries: exponents must be finite and non-negative");
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const FracTerm& a, const FracTerm& b) { return a.exponent < b.exponent; });
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const FracTerm& t) { return t.coeff == 0; });
}

real FracSeries::operator()(const real& xi) const { return eval_frac_series(*this, xi); }

FracSeries& FracSeries::operator+=(const FracSeries& rhs) {
  std::vector<FracTerm> all = terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  *this = FracSeries(std::move(all));
  return *this;
}

FracSeries operator*(const real& s, const FracSeries& f) {
  std::vector<FracTerm> scaled = f.terms_;
  for (auto& t : scaled) t.coeff *= s;
  return FracSeries(std::move(scaled));
}

FracSeries caputo_monomial(int k, const FracOrder& alpha) {
  if (k < 0) throw DomainError("caputo_monomial: k must be non-negative");
  if (k < alpha.ceiling()) return {};

  if (alpha.is_integer()) {
    // Classical derivative k (k-1) ... (k-a+1) xi^(k-a); no Gamma ratio.
    real c = 1;
    for (int j = 0; j < alpha.ceiling(); ++j) c *= (k - j);
    return FracSeries({{c, real(k - alpha.ceiling())}});
  }
  const real exponent = real(k) - alpha.value();
  const real c = gamma(real(k + 1)) / gamma(exponent + 1);
  return FracSeries({{c, exponent}});
}

FracSeries caputo_poly(const Polynomial& p, const FracOrder& alpha) {
  std::vector<FracTerm> terms;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const FracSeries dk = caputo_monomial(static_cast<int>(k), alpha);
    for (const auto& t : dk.terms()) {
      terms.push_back({c[k] * t.coeff, t.exponent});
    }
  }
  return FracSeries(std::move(terms));
}

real eval_frac_series(const FracSeries& s, const real& xi) {
  if (!(xi >= 0 && xi <= 1)) throw DomainError("eval_frac_series: xi must lie in [0, 1]");
  real acc = 0;
  for (const auto& t : s.terms()) {
    if (t.exponent == 0) {
      acc += t.coeff;
    } else if (xi != 0) {
      acc += t.coeff * pow(xi, t.exponent);
    }
  }
  return acc;
}

}  // namespace lrkm
