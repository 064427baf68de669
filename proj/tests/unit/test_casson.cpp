#include <gtest/gtest.h>

#include <numeric>

#include "eqcube/casson.hpp"
#include "eqcube/error.hpp"
#include "oracles/dedekind_floor.hpp"

namespace {

using eqcube::make_rational;
using eqcube::Rational;
using eqcube::SurgeryCoefficient;

TEST(DedekindSum, Examples) {
  EXPECT_EQ(eqcube::dedekind_sum(1, 2), 0);
  EXPECT_EQ(eqcube::dedekind_sum(1, 3), make_rational(1, 18));
  for (int q = -5; q <= 5; ++q) EXPECT_EQ(eqcube::dedekind_sum(q, 1), 0);
}

TEST(DedekindSum, MatchesFloorDefinition) {
  for (long p = 1; p <= 40; ++p) {
    for (long q = -40; q <= 40; ++q) {
      if (std::gcd(p, q) != 1) continue;
      EXPECT_EQ(eqcube::dedekind_sum(q, p), oracle::dedekind(q, p)) << "q=" << q << " p=" << p;
    }
  }
}

TEST(DedekindSum, Reciprocity) {
  for (long p = 2; p <= 50; ++p) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Rational rhs = Rational(-1, 4) + (make_rational(p, q) + make_rational(q, p) + make_rational(1, p * q)) / 12;
      EXPECT_EQ(eqcube::dedekind_sum(q, p) + eqcube::dedekind_sum(p, q), rhs);
    }
  }
}

TEST(DedekindSum, OddAndPeriodic) {
  for (long p = 1; p <= 50; ++p) {
    for (long q = 1; q <= 50; ++q) {
      if (std::gcd(p, q) != 1) continue;
      EXPECT_EQ(eqcube::dedekind_sum(-q, p), -eqcube::dedekind_sum(q, p));
      EXPECT_EQ(eqcube::dedekind_sum(q + p, p), eqcube::dedekind_sum(q, p));
    }
  }
}

TEST(DedekindSum, Errors) {
  EXPECT_THROW(eqcube::dedekind_sum(2, 4), eqcube::Error);
  EXPECT_THROW(eqcube::dedekind_sum(1, 0), eqcube::Error);
}

TEST(SurgeryCoefficientValidation, Errors) {
  EXPECT_THROW(SurgeryCoefficient(2, 4), eqcube::Error);
  EXPECT_THROW(SurgeryCoefficient(1, 0), eqcube::Error);
  EXPECT_EQ(SurgeryCoefficient(-3, 6 - 1).q_over_p(), make_rational(-5, 3));
}

TEST(LensLambda, SphereCases) {
  for (long q = 1; q <= 20; ++q) {
    EXPECT_EQ(eqcube::lambda_lens(SurgeryCoefficient(1, q)), 0);
    EXPECT_EQ(eqcube::lambda_lens(SurgeryCoefficient(-1, q)), 0);
    EXPECT_EQ(eqcube::lambda_lens(SurgeryCoefficient(1, -q)), 0);
  }
}

TEST(LensLambda, ProjectiveSpaceVanishes) {
  // RP^3 admits an orientation-reversing diffeomorphism, so lambda = 0.
  EXPECT_EQ(eqcube::lambda_lens(SurgeryCoefficient(2, 1)), 0);
  EXPECT_EQ(eqcube::lambda_lens(SurgeryCoefficient(-2, 1)), 0);
}

TEST(LensLambda, OrientationReversalNegates) {
  // p/q and p/(-q) surgeries on the unknot give oppositely oriented spaces.
  for (long p = 2; p <= 15; ++p) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      EXPECT_EQ(eqcube::lambda_lens(SurgeryCoefficient(p, -q)), -eqcube::lambda_lens(SurgeryCoefficient(p, q)));
    }
  }
}

TEST(LensLambda, KnownValues) {
  // L(3,1): -s(1,3)/2 = -1/36; L(5,1): s(1,5) = 1/5, so -1/10.
  EXPECT_EQ(eqcube::lambda_lens(SurgeryCoefficient(3, 1)), make_rational(-1, 36));
  EXPECT_EQ(eqcube::lambda_lens(SurgeryCoefficient(5, 1)), make_rational(-1, 10));
  EXPECT_THROW(eqcube::lambda_lens(SurgeryCoefficient(0, 1)), eqcube::Error);
}

}  // namespace
