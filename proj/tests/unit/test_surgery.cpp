#include <gtest/gtest.h>

#include <numeric>

#include "eqcube/casson.hpp"
#include "eqcube/error.hpp"
#include "eqcube/surgery.hpp"
#include "oracles/qk_expansion.hpp"
#include "oracles/seifert_alexander.hpp"
#include "support/random.hpp"

namespace {

using namespace eqcube;
using testing_support::Rng;
using testing_support::uniform;

SurgeryDatum constant_datum(long s00, long s01, long s10, long s11, long p = 1, long q = 1) {
  SurgeryDatum d;
  d.genus = 1;
  d.Laa = {{OneVarFrac(Rational(s00))}};
  d.Lab = {{OneVarFrac(Rational(s01))}};
  d.Lba = {{OneVarFrac(Rational(s10))}};
  d.Lbb = {{OneVarFrac(Rational(s11))}};
  d.coefficient = SurgeryCoefficient(p, q);
  return d;
}

const HLPoly kTrefoil = HLPoly::t_pow(1) - HLPoly(1) + HLPoly::t_pow(-1);

TEST(LambdaEPrime, TrefoilSeifertData) {
  const HLPoly delta = oracle::seifert_alexander(-1, 1, 0, -1);
  EXPECT_EQ(delta, kTrefoil);
  EXPECT_EQ(lambda_e_prime(constant_datum(-1, 1, 0, -1)), TriVarElem(Rational(oracle::half_second_derivative_at_one(delta))));
}

TEST(LambdaEPrime, FigureEightSeifertData) {
  const HLPoly delta = oracle::seifert_alexander(-1, 1, 0, 1);
  EXPECT_EQ(delta, -HLPoly::t_pow(1) + HLPoly(3) - HLPoly::t_pow(-1));
  EXPECT_EQ(lambda_e_prime(constant_datum(-1, 1, 0, 1)), TriVarElem(Rational(oracle::half_second_derivative_at_one(delta))));
}

TEST(LambdaEPrime, ConstantDataMatchesSeifertOracle) {
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      for (long c = -2; c <= 2; ++c) {
        // Unimodular intersection form: S - S^T = [[0, 1], [-1, 0]].
        const long s01 = c + 1;
        const HLPoly det = oracle::seifert_alexander(a, s01, c, b);
        EXPECT_EQ(lambda_e_prime(constant_datum(a, s01, c, b)),
                  TriVarElem(Rational(oracle::half_second_derivative_at_one(det))))
            << a << " " << s01 << " " << c << " " << b;
      }
    }
  }
}

TEST(LambdaEPrime, GenusZeroVanishes) {
  SurgeryDatum d;
  EXPECT_EQ(lambda_e_prime(d), TriVarElem());
}

TEST(LambdaEPrime, SymmetricOnRandomData) {
  Rng r(7);
  for (int i = 0; i < 15; ++i) {
    SurgeryDatum d;
    d.genus = uniform(r, 1, 2);
    for (auto* m : {&d.Laa, &d.Lab, &d.Lba, &d.Lbb}) {
      m->assign(d.genus, std::vector<OneVarFrac>(d.genus));
      for (auto& row : *m)
        for (auto& x : row) x = OneVarFrac(testing_support::random_poly(r, 2));
    }
    EXPECT_TRUE(check_symmetry(lambda_e_prime(d)));
  }
}

TEST(SurgeryDatum, Validation) {
  SurgeryDatum d = constant_datum(1, 1, 0, 1);
  d.Laa.clear();
  try {
    d.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDatum);
  }
  SurgeryDatum z;
  z.coefficient = SurgeryCoefficient(0, 1);
  try {
    z.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroP);
  }
}

TEST(SurgeryDelta, TrefoilPlusOne) {
  // 6 * 1 * 1 + 6 * lambda(S^3) = 6.
  EXPECT_EQ(surgery_delta(constant_datum(-1, 1, 0, -1)), TriVarElem(Rational(6)));
}

TEST(SurgeryDelta, LensContribution) {
  // Genus zero: only 6 lambda(L(p, q)) remains.
  for (long p = 1; p <= 7; ++p) {
    for (long q = -7; q <= 7; ++q) {
      if (q == 0 || std::gcd(p, q) != 1) continue;
      SurgeryDatum d;
      d.coefficient = SurgeryCoefficient(p, q);
      EXPECT_EQ(surgery_delta(d), TriVarElem(6 * lambda_lens(d.coefficient)));
    }
  }
}

TEST(SurgeryDelta, EvaluationConsistency) {
  Rng r(11);
  for (int i = 0; i < 20; ++i) {
    SurgeryDatum d;
    d.genus = uniform(r, 0, 2);
    for (auto* m : {&d.Laa, &d.Lab, &d.Lba, &d.Lbb}) {
      m->assign(d.genus, std::vector<OneVarFrac>(d.genus));
      for (auto& row : *m)
        for (auto& x : row) x = OneVarFrac(Rational(uniform(r, -3, 3)));
    }
    int p, q;
    do {
      p = uniform(r, -7, 7);
      q = uniform(r, -7, 7);
    } while (p == 0 || q == 0 || std::gcd(p, q) != 1);
    d.coefficient = SurgeryCoefficient(p, q);
    EXPECT_EQ(eval_at_111(surgery_delta(d)),
              6 * make_rational(q, p) * eval_at_111(lambda_e_prime(d)) + 6 * lambda_lens(d.coefficient));
  }
}

TEST(ConnectedSum, IsSixLambda) {
  EXPECT_EQ(connected_sum_delta(make_rational(-3, 4)), TriVarElem(make_rational(-9, 2)));
  EXPECT_EQ(connected_sum_delta(0), TriVarElem());
}

TEST(FramedKnotChange, RejectsSymmetricV) {
  try {
    FramedKnotChange(HLPoly::t_pow(1) + HLPoly::t_pow(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAntisymmetric);
  }
}

TEST(FramingV, TrefoilOneMeridian) {
  const AlexanderPair pair(kTrefoil, kTrefoil);
  EXPECT_EQ(framing_V(pair, 1).V(), HLPoly::t_pow(1, make_rational(-1, 2)) + HLPoly::t_pow(-1, make_rational(1, 2)));
}

TEST(FramingV, LinearInNAndAntisymmetric) {
  Rng r(3);
  for (int i = 0; i < 20; ++i) {
    const AlexanderPair pair = testing_support::random_pair(r, 2);
    const HLPoly v1 = framing_V(pair, 1).V();
    EXPECT_EQ(v1.inverted(), -v1);
    for (int n = -3; n <= 3; ++n) EXPECT_EQ(framing_V(pair, n).V(), v1 * Rational(n));
  }
}

TEST(FramingV, TrivialPairGivesZero) {
  EXPECT_TRUE(framing_V(AlexanderPair(), 5).V().is_zero());
}

TEST(SeifertV, ConstantDiagonalVanishes) {
  const AlexanderPair pair(kTrefoil, kTrefoil);
  EXPECT_TRUE(seifert_V(pair, {OneVarFrac(Rational(2)), OneVarFrac(Rational(-1))}).V().is_zero());
}

TEST(SeifertV, MonomialDiagonal) {
  // delta (t - t^-1) for L = t.
  const AlexanderPair pair(kTrefoil, kTrefoil);
  EXPECT_EQ(seifert_V(pair, {OneVarFrac(HLPoly::t_pow(1))}).V(), kTrefoil * (HLPoly::t_pow(1) - HLPoly::t_pow(-1)));
}

TEST(KnotChange, FramingMovesCancel) {
  Rng r(5);
  for (int i = 0; i < 6; ++i) {
    const AlexanderPair pair = testing_support::random_pair(r, 2);
    const TriVarElem up = knot_change_delta(framing_V(pair, 1), pair);
    const TriVarElem down = knot_change_delta(framing_V(pair, -1), pair);
    EXPECT_EQ(up + down, TriVarElem());
    EXPECT_TRUE(check_symmetry(up));
  }
}

TEST(KnotChange, ZeroVGivesZero) {
  EXPECT_EQ(knot_change_delta(FramedKnotChange(), AlexanderPair(kTrefoil, kTrefoil)), TriVarElem());
}

TEST(Qk, TrivialPairMatchesExpansion) {
  for (int k = 1; k <= 4; ++k) {
    const TriVarElem qk = q_k(AlexanderPair(), k);
    EXPECT_EQ(qk, oracle::qk_trivial_pair(k)) << k;
    EXPECT_EQ(eval_at_111(qk), Rational(oracle::qk_trivial_pair_at_111(k))) << k;
  }
}

TEST(Qk, EqualsKnotChangeOfOddMonomial) {
  const AlexanderPair pair(kTrefoil, kTrefoil);
  for (int k = 1; k <= 3; ++k) {
    const FramedKnotChange v(HLPoly::t_pow(k) - HLPoly::t_pow(-k));
    EXPECT_EQ(q_k(pair, k), knot_change_delta(v, pair));
    EXPECT_TRUE(check_symmetry(q_k(pair, k)));
  }
}

TEST(Qk, RejectsNonPositiveK) { EXPECT_ANY_THROW(q_k(AlexanderPair(), 0)); }

class Reduction : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { reducer_ = new QkReducer(AlexanderPair(kTrefoil, kTrefoil), 10, DegreeWindow{}); }
  static void TearDownTestSuite() {
    delete reducer_;
    reducer_ = nullptr;
  }
  static QkReducer* reducer_;
};
QkReducer* Reduction::reducer_ = nullptr;

TEST_F(Reduction, QkReduceToZero) {
  EXPECT_EQ(reducer_->rank(), 10u);
  const AlexanderPair pair(kTrefoil, kTrefoil);
  for (int k = 1; k <= 10; ++k) {
    const QkReduction red = reducer_->reduce(q_k(pair, k));
    EXPECT_EQ(red.representative, TriVarElem()) << k;
    ASSERT_EQ(red.coordinates.size(), 10u);
    for (int j = 1; j <= 10; ++j) EXPECT_EQ(red.coordinates[j - 1], Rational(j == k ? 1 : 0));
  }
}

TEST_F(Reduction, ConstantSurvives) {
  const QkReduction red = reducer_->reduce(TriVarElem(Rational(6)));
  EXPECT_NE(red.representative, TriVarElem());
  EXPECT_EQ(reducer_->reduce(red.representative).representative, red.representative);
}

TEST_F(Reduction, LinearAndIdempotent) {
  const AlexanderPair pair(kTrefoil, kTrefoil);
  const TriVarElem a = TriVarElem(Rational(6)) + q_k(pair, 2);
  const TriVarElem b = knot_change_delta(framing_V(pair, 1), pair);
  const Rational c = make_rational(-2, 3);
  const TriVarElem ra = reducer_->reduce(a).representative;
  const TriVarElem rb = reducer_->reduce(b).representative;
  EXPECT_EQ(reducer_->reduce(a + TriVarElem(c) * b).representative, ra + TriVarElem(c) * rb);
  EXPECT_EQ(reducer_->reduce(ra).representative, ra);
  EXPECT_EQ(ra, reducer_->reduce(TriVarElem(Rational(6))).representative);
}

TEST_F(Reduction, CoordinatesReconstructInput) {
  const AlexanderPair pair(kTrefoil, kTrefoil);
  const TriVarElem f = TriVarElem(Rational(1)) + q_k(pair, 3) * TriVarElem(Rational(5)) - q_k(pair, 7);
  const QkReduction red = reducer_->reduce(f);
  TriVarElem back = red.representative;
  for (int k = 1; k <= 10; ++k) back = back + TriVarElem(red.coordinates[k - 1]) * q_k(pair, k);
  EXPECT_EQ(back, f);
}

TEST(ReductionWindow, OverflowIsReported) {
  try {
    QkReducer(AlexanderPair(kTrefoil, kTrefoil), 10, DegreeWindow{-3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WindowOverflow);
  }
}

}  // namespace
