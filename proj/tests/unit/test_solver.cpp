#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dense_collocation.hpp"
#include "lrkm/lrkm.hpp"
#include "special.hpp"
#include "support.hpp"

using lrkm::FracOrder;
using lrkm::Polynomial;
using lrkm::ProblemSpec;
using lrkm::real;
using lrkm::SolverConfig;
using testing_support::kTight;
using testing_support::ld;
using testing_support::r;

namespace {

lrkm::CoefficientFn constant(const real& c) {
  return [c](const real&) { return c; };
}

// a2 D^alpha p + a1 D^beta p + a0 p from the closed-form oracle, in long double.
long double apply_operator(const ProblemSpec& s, const Polynomial& p, const real& x) {
  const long double a = ld(s.alpha.value());
  const long double b = ld(s.beta.value());
  const long double xl = ld(x);
  long double da = 0;
  long double db = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    da += ld(p[k]) * oracle::caputo_monomial(k, a, xl);
    db += ld(p[k]) * oracle::caputo_monomial(k, b, xl);
  }
  return ld(s.a2(x)) * da + ld(s.a1(x)) * db + ld(s.a0(x)) * ld(p(x));
}

// Linear problem with a quintic solution through (0,1), (0.4,?), (1,?).
ProblemSpec linear_quintic() {
  const Polynomial exact{real(1), real(-2), real(3), real(1), real(-4), real(2)};
  return lrkm::manufacture(
      exact, r("0.4"), FracOrder(r("1.6")), FracOrder(r("0.4")), [](const real& x) { return 1 + x; },
      [](const real& x) { return x * x; }, [](const real& x) { return 2 + x; },
      [](const real&, const real&, const real&) { return real(0); });
}

}  // namespace

TEST(Homogenize, ShiftInterpolatesBoundaryData) {
  ProblemSpec s = linear_quintic();
  s.gamma0 = r("1.5");
  s.gamma1 = r("-0.25");
  s.gamma2 = r("2");
  const lrkm::Homogenized h = lrkm::homogenize(s);
  EXPECT_LE(h.shift.degree(), 2);
  EXPECT_NEAR(ld(h.shift(real(0))), 1.5L, kTight);
  EXPECT_NEAR(ld(h.shift(s.theta)), -0.25L, kTight);
  EXPECT_NEAR(ld(h.shift(real(1))), 2.0L, kTight);
  EXPECT_EQ(h.spec.gamma0, real(0));
  EXPECT_EQ(h.spec.gamma1, real(0));
  EXPECT_EQ(h.spec.gamma2, real(0));

  // g0(x, w, wp) = g(x, w + q, wp + q') - (L q)(x)
  const Polynomial dq = lrkm::diff_poly(h.shift);
  for (int i = 1; i <= 9; ++i) {
    const real x = real(i) / 10;
    const real w = r("0.3");
    const real wp = r("-0.7");
    const long double want = ld(s.g(x, w + h.shift(x), wp + dq(x))) - apply_operator(s, h.shift, x);
    EXPECT_NEAR(ld(h.spec.g(x, w, wp)), want, 1e-15L);
  }
}

TEST(Solve, BoundaryValuesAreExact) {
  ProblemSpec s;
  s.alpha = FracOrder(r("1.5"));
  s.beta = FracOrder(r("0.5"));
  s.theta = r("0.3");
  s.gamma0 = real(1);
  s.gamma1 = r("0.5");
  s.gamma2 = real(2);
  s.a0 = constant(real(0));
  s.a1 = constant(real(0));
  s.a2 = constant(real(1));
  s.g = [](const real& x, const real& z, const real&) { return exp(x) + z / 4; };
  SolverConfig cfg;
  cfg.m = 8;
  cfg.n = 20;
  const Polynomial z = lrkm::solve(s, cfg).approximation();
  EXPECT_NEAR(ld(z(real(0))), 1.0L, kTight);
  EXPECT_NEAR(ld(z(s.theta)), 0.5L, kTight);
  EXPECT_NEAR(ld(z(real(1))), 2.0L, kTight);
}

TEST(Solve, CollocationResidualVanishesAtKeptNodes) {
  ProblemSpec s = linear_quintic();
  s.g = [](const real& x, const real&, const real&) { return cos(3 * x); };
  SolverConfig cfg;
  cfg.m = 7;
  const lrkm::SolveReport rep = lrkm::solve(s, cfg);
  const Polynomial z = rep.approximation();
  ASSERT_FALSE(rep.kept.empty());
  for (const auto k : rep.kept) {
    const real x = rep.nodes[k];
    EXPECT_NEAR(apply_operator(s, z, x), ld(s.g(x, real(0), real(0))), 1e-14L) << "node " << k;
  }
}

TEST(Solve, RecoversSolutionsInTheSpaceForAnyNodeOffset) {
  const ProblemSpec s = linear_quintic();
  for (const char* offset : {"0.1", "0.3", "0.7", "0.9"}) {
    SolverConfig cfg;
    cfg.m = 5;
    cfg.node_offset = r(offset);
    const lrkm::SolveReport rep = lrkm::solve(s, cfg);
    EXPECT_LT(ld(testing_support::max_abs_error(rep)), 1e3L * kTight) << "offset " << offset;
  }
}

TEST(Solve, ZeroProblemHasZeroSolution) {
  ProblemSpec s;
  s.alpha = FracOrder(r("1.5"));
  s.beta = FracOrder(r("0.5"));
  s.theta = r("0.4");
  s.a0 = constant(real(0));
  s.a1 = constant(real(0));
  s.a2 = constant(real(1));
  s.g = [](const real&, const real&, const real&) { return real(0); };
  SolverConfig cfg;
  cfg.m = 6;
  cfg.n = 3;
  EXPECT_TRUE(lrkm::solve(s, cfg).approximation().is_zero());
}

TEST(Solve, IntegerOrderMatchesDenseCollocation) {
  const Polynomial exact{real(1), real(2), real(-3), real(1)};
  for (int m : {4, 5}) {
    const ProblemSpec s = lrkm::manufacture(
        exact, r("0.5"), FracOrder(real(2)), FracOrder(real(1)), [](const real& x) { return x; },
        [](const real& x) { return x + 1; }, constant(real(1)),
        [](const real&, const real&, const real&) { return real(0); });
    oracle::LinearBvp bvp;
    bvp.theta = 0.5L;
    bvp.g0 = 1;
    bvp.g1 = ld(exact(r("0.5")));
    bvp.g2 = 1;
    bvp.a0 = [](long double x) { return x; };
    bvp.a1 = [](long double x) { return x + 1; };
    bvp.a2 = [](long double) { return 1.0L; };
    // f = z'' + (x + 1) z' + x z for z = 1 + 2x - 3x^2 + x^3
    bvp.f = [](long double x) {
      const long double z = 1 + 2 * x - 3 * x * x + x * x * x;
      const long double z1 = 2 - 6 * x + 3 * x * x;
      const long double z2 = -6 + 6 * x;
      return z2 + (x + 1) * z1 + x * z;
    };
    const auto dense = oracle::dense_collocation(bvp, m, 0.3L);
    SolverConfig cfg;
    cfg.m = m;
    const Polynomial z = lrkm::solve(s, cfg).approximation();
    for (int i = 0; i <= 10; ++i) {
      EXPECT_NEAR(ld(z(real(i) / 10)), oracle::eval_monomials(dense, 0.1L * i), 1e-9L) << "m=" << m;
    }
  }
}

TEST(Solve, ErrorDecreasesWithMForNonPolynomialProxy) {
  // exact = xi (xi - theta) (xi - 1) times the degree-17 Taylor polynomial of exp.
  const real theta = r("0.5");
  Polynomial taylor;
  real fact = 1;
  for (int k = 0; k <= 17; ++k) {
    if (k > 0) fact *= k;
    taylor += Polynomial::monomial(k, 1 / fact);
  }
  const ProblemSpec s = lrkm::manufacture(
      testing_support::cubic_bubble(theta) * taylor, theta, FracOrder(r("1.75")), FracOrder(r("0.75")),
      [](const real& x) { return x; }, [](const real& x) { return x + 1; }, constant(real(1)),
      [](const real&, const real&, const real&) { return real(0); });
  real previous = std::numeric_limits<real>::infinity();
  for (int m = 5; m <= 9; ++m) {
    SolverConfig cfg;
    cfg.m = m;
    cfg.n = 10;
    const real err = testing_support::max_abs_error(lrkm::solve(s, cfg));
    EXPECT_LT(err, previous) << "m=" << m;
    previous = err;
  }
}

TEST(Solve, WarnsWhenANodeHitsTheta) {
  ProblemSpec s = testing_support::square_problem(r("1.75"), r("0.75"));
  SolverConfig cfg;
  cfg.m = 5;
  cfg.node_offset = r("0.5");
  const lrkm::SolveReport rep = lrkm::solve(s, cfg);
  ASSERT_EQ(rep.warnings.size(), 1u);
  EXPECT_NE(rep.warnings[0].find("coincides with theta"), std::string::npos);
}

TEST(Solve, VanishingLeadingCoefficientIsRejected) {
  ProblemSpec s = linear_quintic();
  s.a2 = constant(real(0));
  EXPECT_THROW(lrkm::solve(s, SolverConfig{}), lrkm::DomainError);
}

TEST(Solve, NonFiniteRightHandSideIsNumericalError) {
  ProblemSpec s = linear_quintic();
  s.g = [](const real& x, const real&, const real&) { return 1 / (x - x); };
  EXPECT_THROW(lrkm::solve(s, SolverConfig{}), lrkm::NumericalError);
  s.g = [](const real&, const real&, const real&) -> real { throw lrkm::expr::EvalError("ln of a non-positive argument"); };
  try {
    lrkm::solve(s, SolverConfig{});
    FAIL() << "expected NumericalError";
  } catch (const lrkm::NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("iteration 1"), std::string::npos);
  }
}

TEST(Solve, StopToleranceEndsIterationEarly) {
  SolverConfig cfg;
  cfg.m = 5;
  cfg.n = 100;
  cfg.stop_tol = r("1e-15");
  const lrkm::SolveReport rep = lrkm::solve(testing_support::square_problem(r("1.75"), r("0.75")), cfg);
  EXPECT_TRUE(rep.stopped_early);
  EXPECT_LT(rep.iterations, 100);
  EXPECT_LE(rep.iterates_delta.back(), *cfg.stop_tol);
  EXPECT_EQ(rep.iterates_delta.size(), static_cast<std::size_t>(rep.iterations));
}

TEST(Solve, IteratesContract) {
  SolverConfig cfg;
  cfg.m = 5;
  cfg.n = 9;
  for (const auto& spec : {testing_support::square_problem(r("1.75"), r("0.75")),
                           testing_support::cubic_problem(r("1.75"), r("0.75"))}) {
    const lrkm::SolveReport rep = lrkm::solve(spec, cfg);
    ASSERT_EQ(rep.iterates_delta.size(), 9u);
    for (std::size_t i = 2; i < rep.iterates_delta.size(); ++i) {
      EXPECT_LE(rep.iterates_delta[i], rep.iterates_delta[i - 1]) << "step " << i;
    }
  }
}

TEST(Solve, NinthIterateIsNearAFixedPoint) {
  SolverConfig cfg;
  cfg.m = 5;
  cfg.n = 9;
  const lrkm::ProblemSpec spec = testing_support::square_problem(r("1.75"), r("0.75"));
  const lrkm::SolveReport rep = lrkm::solve(spec, cfg);
  const lrkm::Homogenized h = lrkm::homogenize(spec);
  cfg.n = 1;
  const lrkm::SolveReport next = lrkm::iterate(h.spec, cfg, rep.solution);
  EXPECT_LT(ld(next.iterates_delta[0]), 1e3L * kTight);
}

TEST(Examples, ReachExpectedAccuracy) {
  SolverConfig cfg;
  cfg.m = 5;
  cfg.n = 9;
  EXPECT_LT(ld(testing_support::max_abs_error(lrkm::solve(testing_support::square_problem(r("1.75"), r("0.75")), cfg))),
            1e-10L);
  EXPECT_LT(ld(testing_support::max_abs_error(lrkm::solve(testing_support::cubic_problem(r("1.75"), r("0.75")), cfg))),
            1e-8L);
}

TEST(Manufacture, ForcingMatchesQuadratureOfTheOperator) {
  // For the z^2 problem, g(x, z, z') evaluated on the exact solution equals
  // D^a z + (x + 1) D^b z + x z, here computed by quadrature.
  const real alpha = r("1.75");
  const real beta = r("0.75");
  const ProblemSpec s = testing_support::square_problem(alpha, beta);
  const Polynomial z = *s.exact;
  const Polynomial dz = lrkm::diff_poly(z);
  const Polynomial d2z = lrkm::diff_poly(dz);
  for (const char* xs : {"0.2", "0.5", "0.9"}) {
    const real x = r(xs);
    const real da = lrkm::rl_quadrature_oracle([&](const real& t) { return d2z(t); }, 2 - alpha, x);
    const real db = lrkm::rl_quadrature_oracle([&](const real& t) { return dz(t); }, 1 - beta, x);
    EXPECT_NEAR(ld(s.g(x, z(x), dz(x))), ld(da + (x + 1) * db + x * z(x)), 1e-7L);
  }
  EXPECT_EQ(s.gamma0, real(0));
  EXPECT_EQ(s.gamma2, real(0));
}

TEST(SolverConfig, Validation) {
  SolverConfig cfg;
  cfg.m = 2;
  EXPECT_THROW(cfg.validate(), lrkm::DomainError);
  cfg = SolverConfig{};
  cfg.node_offset = real(1);
  EXPECT_THROW(cfg.validate(), lrkm::DomainError);
  cfg = SolverConfig{};
  cfg.n = 0;
  EXPECT_THROW(cfg.validate(), lrkm::DomainError);
  cfg = SolverConfig{};
  cfg.m = 4;
  cfg.node_offset = r("0.3");
  const auto nodes = cfg.nodes();
  ASSERT_EQ(nodes.size(), 3u);
  EXPECT_EQ(nodes[0], r("0.3") / 4);
  EXPECT_EQ(nodes[2], r("2.3") / 4);
}
