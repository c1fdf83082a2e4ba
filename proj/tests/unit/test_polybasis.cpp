#include <gtest/gtest.h>

#include <vector>

#include "lrkm/lrkm.hpp"
#include "support.hpp"

using lrkm::Polynomial;
using lrkm::real;
using testing_support::ld;

TEST(Polynomial, TrimsTrailingZeros) {
  const Polynomial p{real(1), real(2), real(0), real(0)};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Polynomial{real(0)}.is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a{real(1), real(1)};   // 1 + x
  const Polynomial b{real(-1), real(1)};  // x - 1
  EXPECT_EQ(a * b, (Polynomial{real(-1), real(0), real(1)}));
  EXPECT_EQ(a + b, (Polynomial{real(0), real(2)}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(real(3) * a, (Polynomial{real(3), real(3)}));
  EXPECT_EQ(ld((a * b)(real(3))), 8.0L);
}

TEST(Polynomial, DerivativeOfMonomial) {
  const Polynomial d = lrkm::diff_poly(Polynomial::monomial(5, real(2)));
  EXPECT_EQ(d, Polynomial::monomial(4, real(10)));
  EXPECT_TRUE(lrkm::diff_poly(Polynomial{real(7)}).is_zero());
}

TEST(Polynomial, DegreeCap) {
  EXPECT_NO_THROW(Polynomial::monomial(lrkm::kMaxDegree));
  EXPECT_THROW(Polynomial::monomial(lrkm::kMaxDegree + 1), lrkm::DomainError);
  const Polynomial big = Polynomial::monomial(40);
  EXPECT_THROW(big * big, lrkm::DomainError);
}

TEST(Polynomial, InnerProductOfMonomials) {
  // <x^i, x^j> = 1/(i+j+1)
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      EXPECT_NEAR(ld(lrkm::inner(Polynomial::monomial(i), Polynomial::monomial(j))), 1.0L / (i + j + 1), 1e-18L);
    }
  }
}

TEST(ShiftedLegendre, LowOrders) {
  EXPECT_EQ(lrkm::shifted_legendre(0), Polynomial{real(1)});
  EXPECT_EQ(lrkm::shifted_legendre(1), (Polynomial{real(-1), real(2)}));
  EXPECT_EQ(lrkm::shifted_legendre(2), (Polynomial{real(1), real(-6), real(6)}));
  EXPECT_EQ(lrkm::shifted_legendre(3), (Polynomial{real(-1), real(12), real(-30), real(20)}));
}

TEST(ShiftedLegendre, OrthogonalWithKnownNorms) {
  std::vector<Polynomial> p;
  for (int n = 0; n <= 15; ++n) p.push_back(lrkm::shifted_legendre(n));
  for (int i = 0; i <= 15; ++i) {
    for (int j = 0; j <= 15; ++j) {
      const long double want = i == j ? 1.0L / (2 * i + 1) : 0.0L;
      EXPECT_NEAR(ld(lrkm::inner(p[i], p[j])), want, 1e-13L) << i << "," << j;
    }
  }
}

TEST(ShiftedLegendre, Endpoints) {
  for (int n = 0; n <= 20; ++n) {
    const Polynomial p = lrkm::shifted_legendre(n);
    EXPECT_NEAR(ld(p(real(1))), 1.0L, 1e-12L);
    EXPECT_NEAR(ld(p(real(0))), n % 2 ? -1.0L : 1.0L, 1e-12L);
  }
}

TEST(PhiBasis, VanishesAtEndpoints) {
  const lrkm::BasisSet b = lrkm::phi_basis(12);
  ASSERT_EQ(b.members.size(), 11u);
  for (const auto& phi : b.members) {
    EXPECT_NEAR(ld(phi(real(0))), 0.0L, 1e-14L);
    EXPECT_NEAR(ld(phi(real(1))), 0.0L, 1e-14L);
  }
  EXPECT_EQ(b.members[0], lrkm::shifted_legendre(2) - lrkm::shifted_legendre(0));
  EXPECT_EQ(b.members[1], lrkm::shifted_legendre(3) - lrkm::shifted_legendre(1));
}

TEST(GramSchmidt, OrthonormalAndReconstructs) {
  for (int m = 2; m <= 12; ++m) {
    const auto b = lrkm::phi_basis(m);
    const auto gs = lrkm::gram_schmidt(b.members);
    ASSERT_EQ(gs.orthonormal.size(), b.members.size());
    EXPECT_TRUE(gs.dropped.empty());
    for (std::size_t i = 0; i < gs.orthonormal.size(); ++i) {
      for (std::size_t j = 0; j < gs.orthonormal.size(); ++j) {
        EXPECT_NEAR(ld(lrkm::inner(gs.orthonormal[i], gs.orthonormal[j])), i == j ? 1.0L : 0.0L, 1e-14L);
      }
      Polynomial rebuilt;
      for (std::size_t k = 0; k < gs.coeffs[i].size(); ++k) rebuilt += gs.coeffs[i][k] * b.members[gs.kept[k]];
      EXPECT_LT(ld(lrkm::norm(rebuilt - gs.orthonormal[i])), 1e-14L);
    }
  }
}

TEST(GramSchmidt, DropsDependentVectorsAndKeepsEarlierOnes) {
  const Polynomial a{real(0), real(1)};
  const Polynomial b{real(1), real(1)};
  const std::vector<Polynomial> vs = {a, real(2) * a, b, a + b, Polynomial::monomial(2)};
  const auto gs = lrkm::gram_schmidt(vs);
  EXPECT_EQ(gs.kept, (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(gs.dropped, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(gs.orthonormal.size(), 3u);
}

TEST(GramSchmidt, NothingSurvivesIsDegenerate) {
  const std::vector<Polynomial> zeros = {Polynomial{}, Polynomial{}};
  EXPECT_THROW(lrkm::gram_schmidt(zeros), lrkm::DegenerateError);
}

TEST(GramSchmidt, RejectsNonPositiveTolerance) {
  const std::vector<Polynomial> vs = {Polynomial{real(1)}};
  EXPECT_THROW(lrkm::gram_schmidt(vs, real(0)), lrkm::DomainError);
}
