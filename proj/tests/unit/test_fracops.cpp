#include <gtest/gtest.h>

#include <cmath>

#include "lrkm/lrkm.hpp"
#include "special.hpp"
#include "support.hpp"

using lrkm::FracOrder;
using lrkm::FracSeries;
using lrkm::FracTerm;
using lrkm::Polynomial;
using lrkm::real;
using testing_support::ld;
using testing_support::r;

namespace {

long double rel(long double got, long double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

TEST(Gamma, FrozenValues) {
  EXPECT_LT(rel(ld(lrkm::gamma(r("0.5"))), 1.7724538509055160272981674833411452L), 1e-15L);
  EXPECT_LT(rel(ld(lrkm::gamma(r("5"))), 24.0L), 1e-15L);
  EXPECT_LT(rel(ld(1 / lrkm::gamma(r("1.5"))), 1.1283791670955125739L), 1e-15L);
  EXPECT_LT(rel(ld(lrkm::gamma(r("2")) / lrkm::gamma(r("2.5"))), 0.75225277806367504926L), 1e-15L);
}

TEST(Gamma, AgreesWithBoostOnSweep) {
  for (int i = 1; i <= 300; ++i) {
    const long double x = 0.1L * i;
    const real xr = real(i) / 10;
    EXPECT_LT(rel(ld(lrkm::gamma(xr)), oracle::tgamma(x)), 1e-13L) << "x=" << static_cast<double>(x);
  }
}

TEST(Gamma, RejectsNonPositive) {
  EXPECT_THROW(lrkm::gamma(real(0)), lrkm::DomainError);
  EXPECT_THROW(lrkm::gamma(real(-1.5)), lrkm::DomainError);
}

TEST(FracOrder, CeilingAndRange) {
  EXPECT_EQ(FracOrder(r("1.75")).ceiling(), 2);
  EXPECT_EQ(FracOrder(r("0.75")).ceiling(), 1);
  EXPECT_TRUE(FracOrder(real(2)).is_integer());
  EXPECT_FALSE(FracOrder(r("1.5")).is_integer());
  EXPECT_THROW(FracOrder(real(0)), lrkm::DomainError);
  EXPECT_THROW(FracOrder(r("2.5")), lrkm::DomainError);
}

TEST(FracSeries, Normalizes) {
  const FracSeries s({{real(1), r("0.5")}, {real(0), real(1)}, {real(2), r("0.5")}, {real(4), real(0)}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.terms()[0], (FracTerm{real(4), real(0)}));
  EXPECT_EQ(s.terms()[1], (FracTerm{real(3), r("0.5")}));
  EXPECT_THROW(FracSeries({{real(1), real(-1)}}), lrkm::DomainError);
}

TEST(Caputo, ClosedFormExamples) {
  // D^1.5 x^2 = 2/Gamma(1.5) x^0.5
  const FracSeries d = lrkm::caputo_monomial(2, FracOrder(r("1.5")));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_LT(rel(ld(d.terms()[0].coeff), 2 * 1.1283791670955125739L), 1e-15L);
  EXPECT_EQ(d.terms()[0].exponent, r("0.5"));

  // D^1.75 x^3 = 6/Gamma(2.25) x^1.25
  const FracSeries e = lrkm::caputo_monomial(3, FracOrder(r("1.75")));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_LT(rel(ld(e.terms()[0].coeff), 5.2956607263400188357L), 1e-15L);
  EXPECT_EQ(e.terms()[0].exponent, r("1.25"));
}

TEST(Caputo, MatchesClosedFormOracle) {
  for (const char* a : {"0.25", "0.5", "0.75", "1", "1.25", "1.5", "1.75", "2"}) {
    const long double al = std::stold(a);
    for (int k = 0; k <= 10; ++k) {
      const FracSeries d = lrkm::caputo_monomial(k, FracOrder(r(a)));
      for (int i = 1; i <= 9; ++i) {
        const long double want = oracle::caputo_monomial(k, al, 0.1L * i);
        EXPECT_NEAR(ld(lrkm::eval_frac_series(d, real(i) / 10)), want, 1e-14L * (1 + std::fabs(want)))
            << "alpha=" << a << " k=" << k;
      }
    }
  }
}

TEST(Caputo, Linearity) {
  const Polynomial p{real(1), real(-2), real(3), real(0), real(5)};
  const Polynomial q{real(0), real(4), real(-1), real(2)};
  const FracOrder alpha(r("1.3"));
  const FracSeries lhs = lrkm::caputo_poly(real(2) * p + q, alpha);
  const FracSeries rhs = real(2) * lrkm::caputo_poly(p, alpha) + lrkm::caputo_poly(q, alpha);
  for (int i = 0; i <= 10; ++i) {
    const real x = real(i) / 10;
    EXPECT_NEAR(ld(lrkm::eval_frac_series(lhs, x)), ld(lrkm::eval_frac_series(rhs, x)), 1e-14L);
  }
}

TEST(Caputo, IntegerOrdersAreClassical) {
  const Polynomial p{real(3), real(-1), real(4), real(1), real(-5), real(9)};
  const FracSeries d1 = lrkm::caputo_poly(p, FracOrder(real(1)));
  const FracSeries d2 = lrkm::caputo_poly(p, FracOrder(real(2)));
  const Polynomial p1 = lrkm::diff_poly(p);
  const Polynomial p2 = lrkm::diff_poly(p1);
  for (int i = 0; i <= 10; ++i) {
    const real x = real(i) / 10;
    EXPECT_NEAR(ld(lrkm::eval_frac_series(d1, x)), ld(p1(x)), 1e-14L);
    EXPECT_NEAR(ld(lrkm::eval_frac_series(d2, x)), ld(p2(x)), 1e-14L);
  }
}

TEST(Caputo, AnnihilatesLowDegree) {
  EXPECT_TRUE(lrkm::caputo_poly(Polynomial{real(5)}, FracOrder(r("0.4"))).empty());
  EXPECT_TRUE(lrkm::caputo_poly(Polynomial{real(5), real(-3)}, FracOrder(r("1.6"))).empty());
  EXPECT_FALSE(lrkm::caputo_poly(Polynomial{real(5), real(-3)}, FracOrder(r("0.6"))).empty());
}

TEST(Caputo, ZeroToTheZeroIsOne) {
  // D^1 x = 1 everywhere, including 0.
  const FracSeries d = lrkm::caputo_monomial(1, FracOrder(real(1)));
  EXPECT_EQ(lrkm::eval_frac_series(d, real(0)), real(1));
  EXPECT_THROW(lrkm::eval_frac_series(d, r("1.5")), lrkm::DomainError);
  EXPECT_THROW(lrkm::caputo_monomial(-1, FracOrder(real(1))), lrkm::DomainError);
}

TEST(RlQuadratureOracle, MatchesClosedForm) {
  for (const char* a : {"0.25", "0.5", "0.75", "1.5"}) {
    const long double al = std::stold(a);
    for (int k = 0; k <= 6; ++k) {
      for (const char* x : {"0.1", "0.5", "1"}) {
        const real got = lrkm::rl_quadrature_oracle(
            [k](const real& s) { return Polynomial::monomial(k)(s); }, r(a), r(x));
        EXPECT_NEAR(ld(got), oracle::rl_monomial(k, al, std::stold(x)), 1e-9L) << a << " " << k << " " << x;
      }
    }
  }
  // J^0.5 x = Gamma(2)/Gamma(2.5) x^1.5 at x = 1.
  const real half = lrkm::rl_quadrature_oracle([](const real& s) { return s; }, r("0.5"), real(1));
  EXPECT_NEAR(ld(half), 0.75225277806367504926L, 1e-12L);
}

TEST(RlQuadratureOracle, AgreesWithCaputoClosedForm) {
  for (const char* a : {"0.25", "0.5", "0.75", "1.25", "1.5", "1.75"}) {
    const FracOrder alpha(r(a));
    const int n = alpha.ceiling();
    for (int k = n; k <= 10; ++k) {
      Polynomial dn = Polynomial::monomial(k);
      for (int i = 0; i < n; ++i) dn = lrkm::diff_poly(dn);
      const FracSeries closed = lrkm::caputo_monomial(k, alpha);
      for (const char* x : {"0.2", "0.5", "0.9"}) {
        const real quad = lrkm::rl_quadrature_oracle([&dn](const real& s) { return dn(s); }, real(n) - alpha.value(), r(x));
        EXPECT_NEAR(ld(quad), ld(lrkm::eval_frac_series(closed, r(x))), 1e-7L);
      }
    }
  }
}

TEST(RlQuadratureOracle, DomainErrors) {
  const auto f = [](const real& s) { return s; };
  EXPECT_THROW(lrkm::rl_quadrature_oracle(f, r("0.5"), real(0)), lrkm::DomainError);
  EXPECT_THROW(lrkm::rl_quadrature_oracle(f, r("0.5"), r("1.5")), lrkm::DomainError);
  EXPECT_THROW(lrkm::rl_quadrature_oracle(f, real(0), r("0.5")), lrkm::DomainError);
}
