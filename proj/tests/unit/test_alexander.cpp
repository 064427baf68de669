#include <gtest/gtest.h>

#include "eqcube/alexander.hpp"
#include "eqcube/error.hpp"
#include "support/random.hpp"

namespace {

using eqcube::AlexanderPair;
using eqcube::ErrorCode;
using eqcube::HLPoly;
using eqcube::OneVarFrac;
using testing_support::Rng;

HLPoly t(int e) { return HLPoly::t_pow(e); }
const HLPoly kTrefoil = t(1) - HLPoly(1) + t(-1);
const OneVarFrac kPole(HLPoly(1) + t(1), HLPoly(1) - t(1));

ErrorCode normalize_error(const HLPoly& p) {
  try {
    eqcube::normalize_symmetric(p);
  } catch (const eqcube::Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

TEST(NormalizeSymmetric, Examples) {
  EXPECT_EQ(eqcube::normalize_symmetric(HLPoly(2)), HLPoly(1));
  EXPECT_EQ(eqcube::normalize_symmetric(t(1)), HLPoly(1));
  EXPECT_EQ(normalize_error(t(1) - HLPoly(2)), ErrorCode::NotSymmetrizable);
  EXPECT_EQ(normalize_error(t(1) - HLPoly(2) + t(-1)), ErrorCode::NonUnitAtOne);
  EXPECT_EQ(eqcube::normalize_symmetric(t(3) * HLPoly(5) - t(2) * HLPoly(5) + t(1) * HLPoly(5)), kTrefoil);
}

TEST(NormalizeSymmetric, HalfShiftsAllowedQuarterShiftsRejected) {
  // t + 1 -> t^{1/2} + t^{-1/2}, scaled to value 1.
  const HLPoly n = eqcube::normalize_symmetric(t(1) + HLPoly(1));
  EXPECT_EQ(n, (HLPoly::monomial(1) + HLPoly::monomial(-1)) * eqcube::make_rational(1, 2));
  EXPECT_EQ(normalize_error(HLPoly::monomial(1) + HLPoly(1)), ErrorCode::NotSymmetrizable);
}

TEST(NormalizeSymmetric, IdempotentAndInversionFixed) {
  Rng r(11);
  for (int i = 0; i < 50; ++i) {
    const HLPoly p = testing_support::random_symmetric(r, 3).shifted(2 * testing_support::uniform(r, -3, 3)) *
                     eqcube::Rational(testing_support::uniform(r, 1, 5));
    const HLPoly n = eqcube::normalize_symmetric(p);
    EXPECT_EQ(eqcube::normalize_symmetric(n), n);
    EXPECT_EQ(n.inverted(), n);
    EXPECT_EQ(n.at_one(), 1);
  }
}

TEST(AlexanderPairValidation, RejectsBadPairs) {
  EXPECT_NO_THROW(AlexanderPair(kTrefoil, kTrefoil));
  EXPECT_NO_THROW(AlexanderPair(kTrefoil, (HLPoly::monomial(1) + HLPoly::monomial(-1)) * eqcube::make_rational(1, 2)));
  EXPECT_THROW(AlexanderPair(t(1), HLPoly(1)), eqcube::Error);
  EXPECT_THROW(AlexanderPair(kTrefoil * HLPoly(2), HLPoly(1)), eqcube::Error);
  EXPECT_THROW(AlexanderPair(HLPoly::monomial(1) + HLPoly::monomial(-1), HLPoly(1)), eqcube::Error);
}

TEST(Functionals, TrivialPair) {
  const AlexanderPair p;
  EXPECT_EQ(eqcube::i_delta(p), kPole);
  EXPECT_TRUE(eqcube::j_delta(p).is_zero());
}

TEST(Functionals, Trefoil) {
  const AlexanderPair p(kTrefoil, kTrefoil);
  const OneVarFrac j(t(1) - t(-1), kTrefoil);
  EXPECT_EQ(eqcube::j_delta(p), j);
  EXPECT_EQ(eqcube::i_delta(p), kPole + j);
  EXPECT_EQ(eqcube::i_delta(p).inverted(), -eqcube::i_delta(p));
}

TEST(Functionals, OddAndDifferenceIdentity) {
  Rng r(12);
  for (int i = 0; i < 40; ++i) {
    const AlexanderPair p = testing_support::random_pair(r, 3);
    EXPECT_EQ(eqcube::i_delta(p).inverted(), -eqcube::i_delta(p));
    EXPECT_EQ(eqcube::j_delta(p).inverted(), -eqcube::j_delta(p));
    EXPECT_EQ(eqcube::i_delta(p) - eqcube::j_delta(p), kPole);
  }
}

TEST(IntegralDelta, ShiftsHalfPowers) {
  const HLPoly half = HLPoly::monomial(1) + HLPoly::monomial(-1);
  EXPECT_EQ(eqcube::integral_delta(half), t(1) + HLPoly(1));
  EXPECT_EQ(eqcube::integral_delta(kTrefoil), kTrefoil);
}

}  // namespace
