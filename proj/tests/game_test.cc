// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xeq/game.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "xeq/error.h"
#include "xeq/rational.h"

namespace xeq {
namespace {

using testing::Gen;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(ParseRational("3/6"), Fraction(1, 2));
  EXPECT_EQ(ParseRational("-4"), Rational(-4));
  EXPECT_EQ(ToString(Fraction(6, -4)), "-3/2");
  EXPECT_EQ(ToString(Rational(0)), "0");
  EXPECT_THROW(ParseRational("1/0"), InputError);
  EXPECT_THROW(ParseRational("0.5"), InputError);
  EXPECT_THROW(ParseRational(""), InputError);
}

TEST(Rational, Rationalize) {
  EXPECT_EQ(Rationalize(1.0 / 3.0, 1000000), Fraction(1, 3));
  EXPECT_EQ(Rationalize(0.25, 10), Fraction(1, 4));
  EXPECT_EQ(Rationalize(-2.0, 10), Rational(-2));
}

TEST(Rational, ProbabilityVector) {
  EXPECT_TRUE(IsProbabilityVector(RationalVector{Fraction(1, 3), Fraction(2, 3)}));
  EXPECT_FALSE(IsProbabilityVector(RationalVector{Fraction(4, 3), Fraction(-1, 3)}));
  EXPECT_FALSE(IsProbabilityVector(RationalVector{Fraction(1, 3), Fraction(1, 3)}));
}

TEST(Shape, IndexRoundTripPlayerOneFastest) {
  const Shape shape({2, 3, 2});
  EXPECT_EQ(shape.num_profiles(), 12u);
  EXPECT_EQ(shape.stride(0), 1u);
  EXPECT_EQ(shape.stride(1), 2u);
  EXPECT_EQ(shape.stride(2), 6u);
  for (std::size_t p = 0; p < shape.num_profiles(); ++p) {
    const std::vector<int> s = shape.profile_strategies(p);
    EXPECT_EQ(shape.profile_index(s), p);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(shape.join(shape.opponent_index(p, i), i, s[i]), p);
    }
  }
  EXPECT_EQ(shape.num_slots(), 7);
  EXPECT_EQ(shape.player_of_slot(4), 1);
  EXPECT_EQ(shape.slot(2, 1), 6);
}

TEST(Game, RejectsBadInput) {
  EXPECT_THROW(Game({2, 2}, {RationalVector(4), RationalVector(3)}), InputError);
  EXPECT_THROW(Game({2}, {RationalVector(2)}), InputError);
  EXPECT_THROW(Game({2, 2}, {RationalVector(4), RationalVector(4)}, {{"a", "a"}, {"x", "y"}}),
               InputError);
}

TEST(Game, LabelsDefaultToIndices) {
  const Game g = testing::IrrationalReplyGame(1, 2);
  EXPECT_EQ(g.label(1, 1), "1");
  EXPECT_EQ(g.find_label(0, "1"), 1);
  EXPECT_EQ(g.find_label(0, "x"), -1);
  EXPECT_EQ(testing::Chicken().profile_label(1), "dare,swerve");
}

TEST(ExpectedUtility, ChickenUniform) {
  const Game g = testing::Chicken();
  EXPECT_EQ(ExpectedUtility(g, 0, JointDistribution::Uniform(g.shape())), Fraction(5, 2));
}

TEST(ProductToJoint, AsymmetricNash) {
  const Game g = testing::Asymmetric();
  const ProductProfile rho(g.shape(), {{Fraction(1, 4), Fraction(3, 4)}, {Fraction(1, 3), Fraction(2, 3)}});
  const JointDistribution pi = ProductToJoint(rho);
  const RationalVector expected = {Fraction(1, 12), Fraction(3, 12), Fraction(2, 12), Fraction(6, 12)};
  EXPECT_EQ(pi.probabilities(), expected);
}

TEST(ProductToJoint, PropertyMarginalsAndMass) {
  Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Shape shape({gen.Int(2, 3), gen.Int(2, 3), gen.Int(2, 3)});
    const ProductProfile rho = gen.RandomProfile(shape, 20);
    const JointDistribution pi = ProductToJoint(rho);
    EXPECT_EQ(Sum(pi.probabilities()), Rational(1));
    for (int i = 0; i < 3; ++i) {
      RationalVector marginal(shape.num_strategies(i));
      for (std::size_t p = 0; p < shape.num_profiles(); ++p) marginal[shape.strategy_of(p, i)] += pi[p];
      EXPECT_EQ(marginal, rho.strategy(i));
    }
  }
}

TEST(IsZeroSum, Fixtures) {
  EXPECT_TRUE(IsZeroSum(testing::MatchingPennies()));
  EXPECT_FALSE(IsZeroSum(testing::Chicken()));
}

TEST(PayoffEquivalence, ErratumStrategies) {
  const Game g = testing::Erratum();
  EXPECT_TRUE(IsPayoffEquivalent(g, 0, RationalVector{1, 0, 0}, RationalVector{0, 1, 0}));
  EXPECT_FALSE(IsPayoffEquivalent(g, 0, RationalVector{1, 0, 0}, RationalVector{0, 0, 1}));
}

TEST(BestResponses, Examples) {
  const Game chicken = testing::Chicken();
  const BestResponseSet br = BestResponses(chicken, 0, RationalVector{Fraction(1, 2), Fraction(1, 2)});
  EXPECT_EQ(br.value, Fraction(5, 2));
  EXPECT_EQ(br.strategies, (std::vector<int>{0, 1}));
  const BestResponseSet er = BestResponses(testing::Erratum(), 0, RationalVector{0, 0, 1});
  EXPECT_EQ(er.value, Rational(2));
  EXPECT_EQ(er.strategies, std::vector<int>{2});
}

}  // namespace
}  // namespace xeq
