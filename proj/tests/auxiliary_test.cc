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

#include "xeq/auxiliary.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "xeq/error.h"
#include "xeq/kernels.h"

namespace xeq {
namespace {

using testing::Gen;

// Straight from the definition, one entry at a time.
ZeroSumGame NaiveGamma0(const Game& game) {
  const Shape& shape = game.shape();
  std::size_t cols = 0;
  for (int i = 0; i < game.num_players(); ++i) cols += game.num_strategies(i) * game.num_strategies(i);
  ZeroSumGame g(game.num_profiles(), cols);
  for (std::size_t s = 0; s < game.num_profiles(); ++s) {
    std::size_t c = 0;
    for (int i = 0; i < game.num_players(); ++i) {
      for (int r = 0; r < game.num_strategies(i); ++r) {
        for (int t = 0; t < game.num_strategies(i); ++t, ++c) {
          if (shape.strategy_of(s, i) != r) continue;
          g.at(s, c) = game.utility(i, s) - game.utility(i, shape.with_strategy(s, i, t));
        }
      }
    }
  }
  return g;
}

RationalVector RandomDeviations(Gen& gen, const Shape& shape) {
  return gen.Simplex(DeviationLayout(shape).size(), 20, 40);
}

TEST(DeviationLayout, RoundTrip) {
  const Shape shape({2, 3, 2});
  const DeviationLayout layout(shape);
  EXPECT_EQ(layout.size(), 4u + 9u + 4u);
  EXPECT_EQ(layout.offset(1), 4u);
  for (std::size_t c = 0; c < layout.size(); ++c) EXPECT_EQ(layout.column(layout.deviation(c)), c);
  EXPECT_EQ(layout.deviation(4 + 5), (DeviationIndex{1, 1, 2}));
}

TEST(BuildGamma0, PropertyMatchesDefinition) {
  Gen gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> counts;
    const int n = gen.Int(2, 3);
    for (int i = 0; i < n; ++i) counts.push_back(gen.Int(2, 3));
    const Game game = gen.RandomGame(counts);
    EXPECT_EQ(BuildGamma0(game), NaiveGamma0(game));
    EXPECT_EQ(kernels::Gamma0Parallel(game), kernels::Gamma0Serial(game));
  }
  for (const auto& fx : testing::SymmetricFixtures()) EXPECT_EQ(BuildGamma0(fx.game), NaiveGamma0(fx.game));
}

TEST(BuildGamma0, SelfDeviationColumnsAreZero) {
  const Game game = testing::Cyclic(3);
  const ZeroSumGame g = BuildGamma0(game);
  const DeviationLayout layout(game.shape());
  for (int i = 0; i < 3; ++i) {
    for (int r = 0; r < 3; ++r) {
      for (std::size_t s = 0; s < g.rows; ++s) EXPECT_EQ(g.at(s, layout.column(i, r, r)), 0);
    }
  }
}

// Payoff-equivalent strategies a and b give different rows.
TEST(BuildGamma0, ErratumRefutation) {
  const Game game = testing::Erratum();
  const ZeroSumGame g = BuildGamma0(game);
  const DeviationLayout layout(game.shape());
  const std::size_t a_to_c = layout.column(0, 0, 2);
  EXPECT_EQ(g.at(game.shape().profile_index(std::vector<int>{0, 0}), a_to_c), Rational(1));
  EXPECT_EQ(g.at(game.shape().profile_index(std::vector<int>{1, 1}), a_to_c), Rational(0));
}

TEST(BuildGamma0, ValueIsZeroOnFixtures) {
  for (const auto& fx : testing::SymmetricFixtures()) {
    EXPECT_EQ(Maximin(BuildGamma0(fx.game)).value, Rational(0)) << fx.name;
  }
}

TEST(DeviationGains, PropertyJointProductAndMatrixAgree) {
  Gen gen(42);
  for (const auto& fx : testing::SymmetricFixtures()) {
    const ZeroSumGame g0 = BuildGamma0(fx.game);
    for (int trial = 0; trial < 10; ++trial) {
      const ProductProfile rho = gen.RandomProfile(fx.game.shape(), 20);
      const JointDistribution pi = ProductToJoint(rho);
      const RationalVector joint = DeviationGains(fx.game, pi);
      EXPECT_EQ(DeviationGains(fx.game, rho), joint) << fx.name;
      EXPECT_EQ(kernels::DeviationGainsParallel(fx.game, pi.probabilities()),
                kernels::DeviationGainsSerial(fx.game, pi.probabilities()));
      RationalVector row_payoffs = g0.RowPayoffs(pi.probabilities());
      for (Rational& v : row_payoffs) v = -v;
      EXPECT_EQ(row_payoffs, joint) << fx.name;
      const RationalVector y = RandomDeviations(gen, fx.game.shape());
      EXPECT_EQ(Gamma0Payoff(fx.game, rho, y), Gamma0Payoff(fx.game, pi, y));
      EXPECT_EQ(Gamma0Payoff(fx.game, pi, y), g0.Payoff(pi.probabilities(), y));
    }
  }
}

TEST(BuildLittleGamma, Examples) {
  const RationalVector unit = {0, 1, 0, 0};
  EXPECT_EQ(BuildLittleGamma(2, unit), ZeroSumGame(2, 2, {1, -1, 0, 0}));
  const RationalVector sym = {0, Fraction(1, 2), Fraction(1, 2), 0};
  const ZeroSumGame g = BuildLittleGamma(2, sym);
  EXPECT_EQ(g, ZeroSumGame(2, 2, {Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)}));
  EXPECT_EQ(Maximin(g).max_strategy, (RationalVector{Fraction(1, 2), Fraction(1, 2)}));
}

TEST(HsGoodReply, UnitDeviation) {
  const Game game = testing::Chicken();
  const DeviationLayout layout(game.shape());
  RationalVector y(layout.size());
  y[layout.column(0, 0, 1)] = 1;
  const ProductProfile pi = HsGoodReply(game, y);
  EXPECT_EQ(pi.strategy(0), (RationalVector{0, 1}));
  EXPECT_EQ(Gamma0Payoff(game, pi, y), Rational(0));
}

TEST(HsGoodReply, PenniesUniformDeviations) {
  const Game game = testing::MatchingPennies();
  const RationalVector y(8, Fraction(1, 8));
  EXPECT_EQ(Gamma0Payoff(game, HsGoodReply(game, y), y), Rational(0));
}

TEST(HsGoodReply, PropertyPayoffZero) {
  Gen gen(43);
  for (const auto& fx : testing::SymmetricFixtures()) {
    for (int trial = 0; trial < 40; ++trial) {
      const RationalVector y = RandomDeviations(gen, fx.game.shape());
      EXPECT_EQ(Gamma0Payoff(fx.game, HsGoodReply(fx.game, y), y), Rational(0)) << fx.name;
    }
  }
}

TEST(HsGoodReply, RejectsNonDistribution) {
  const Game game = testing::Chicken();
  EXPECT_THROW(HsGoodReply(game, RationalVector(8, Fraction(1, 4))), InputError);
  EXPECT_THROW(HsGoodReply(game, RationalVector(7, Fraction(1, 7))), InputError);
}

TEST(DeviationAction, Examples) {
  const Shape mp = testing::MatchingPennies().shape();
  const DeviationLayout layout(mp);
  const auto perm_h = DeviationPermutation(testing::PenniesH(mp));
  EXPECT_EQ(perm_h[layout.column(0, 0, 1)], layout.column(1, 0, 1));
  const auto perm_swap = DeviationPermutation(testing::PlayerSwap(mp));
  EXPECT_EQ(perm_swap[layout.column(0, 0, 1)], layout.column(1, 0, 1));
  EXPECT_EQ(perm_swap[layout.column(1, 0, 1)], layout.column(0, 0, 1));
}

// u0(pi.g, y.g) = u0(pi, y) for a symmetry g.
TEST(DeviationAction, PropertyNaturality) {
  Gen gen(44);
  for (const auto& fx : testing::SymmetricFixtures()) {
    for (int trial = 0; trial < 5; ++trial) {
      const JointDistribution pi = gen.RandomJoint(fx.game.shape(), 30);
      const RationalVector y = RandomDeviations(gen, fx.game.shape());
      for (const GroupElement& g : fx.group.elements()) {
        EXPECT_EQ(Gamma0Payoff(fx.game, ActOnJoint(g, pi), ActOnDeviations(g, y)),
                  Gamma0Payoff(fx.game, pi, y))
            << fx.name;
      }
      const RationalVector avg = AverageDeviations(fx.group, y);
      for (const GroupElement& g : fx.group.elements()) EXPECT_EQ(ActOnDeviations(g, avg), avg);
    }
  }
}

TEST(SymmetricGoodReply, PenniesUnitDeviation) {
  const Game game = testing::MatchingPennies();
  const GroupAction h = testing::Generated(game.shape(), {testing::PenniesH(game.shape())});
  RationalVector y(8);
  y[DeviationLayout(game.shape()).column(0, 0, 1)] = 1;
  const ProductProfile pi = SymmetricGoodReply(game, h, y);
  EXPECT_TRUE(IsInvariant(h, pi));
  EXPECT_EQ(Gamma0Payoff(game, pi, y), Rational(0));
}

TEST(SymmetricGoodReply, PropertyInvariantAndZero) {
  Gen gen(45);
  for (const auto& fx : testing::SymmetricFixtures()) {
    for (int trial = 0; trial < 40; ++trial) {
      const RationalVector y = RandomDeviations(gen, fx.game.shape());
      const ProductProfile pi = SymmetricGoodReply(fx.game, fx.group, y);
      EXPECT_TRUE(IsInvariant(fx.group, pi)) << fx.name;
      EXPECT_EQ(Gamma0Payoff(fx.game, pi, y), Rational(0)) << fx.name;
    }
  }
}

}  // namespace
}  // namespace xeq
