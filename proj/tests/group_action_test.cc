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

#include "xeq/group_action.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.h"
#include "xeq/error.h"

namespace xeq {
namespace {

using testing::Gen;

TEST(GroupElement, RejectsNonBijectionAndBrokenBlocks) {
  const Shape shape({2, 2});
  EXPECT_THROW(GroupElement(shape, {0, 0, 2, 3}), InputError);
  // H1 -> H1 but T1 -> T2 splits player 1's block.
  EXPECT_THROW(GroupElement(shape, {0, 3, 2, 1}), InputError);
  EXPECT_THROW(GroupElement(shape, {0, 1, 2}), InputError);
  const Shape uneven({2, 3});
  EXPECT_THROW(GroupElement(uneven, {2, 3, 0, 1, 4}), InputError);
}

TEST(CloseGroup, PenniesOrders) {
  const Shape shape = testing::MatchingPennies().shape();
  const GroupAction h = testing::Generated(shape, {testing::PenniesH(shape)});
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(testing::Generated(shape, {testing::PenniesG(shape)}).order(), 2u);
  EXPECT_EQ(TrivialGroup(shape).order(), 1u);
  EXPECT_EQ(Compose(testing::PenniesH(shape), testing::PenniesH(shape)), testing::PenniesG(shape));
  EXPECT_TRUE(h.element(0).is_identity());
}

TEST(CloseGroup, CapIsEnforced) {
  const Shape shape = testing::MatchingPennies().shape();
  const std::vector<GroupElement> gens = {testing::PenniesH(shape)};
  EXPECT_THROW(CloseGroup(shape, gens, 3), CapExceeded);
}

TEST(CloseGroup, PropertyClosedUnderCompositionAndInverse) {
  for (const auto& fx : testing::SymmetricFixtures()) {
    const auto& elems = fx.group.elements();
    for (const GroupElement& g : elems) {
      EXPECT_NE(std::find(elems.begin(), elems.end(), g.inverse()), elems.end()) << fx.name;
      for (const GroupElement& h : elems) {
        EXPECT_NE(std::find(elems.begin(), elems.end(), Compose(g, h)), elems.end()) << fx.name;
      }
    }
  }
}

TEST(CloseGroup, CyclicGeneratorsCommute) {
  const Shape shape = testing::Cyclic(3).shape();
  const GroupElement g = testing::CyclicIncrement(shape);
  const GroupElement h = testing::CyclicRotation(shape);
  EXPECT_EQ(Compose(g, h), Compose(h, g));
  EXPECT_EQ(testing::Generated(shape, {g, h}).order(), 9u);
}

TEST(ValidateAction, Examples) {
  const Game chicken = testing::Chicken();
  EXPECT_TRUE(ValidateAction(chicken, testing::Generated(chicken.shape(), {testing::PlayerSwap(chicken.shape())})).valid);
  const Game cyc = testing::Cyclic(3);
  EXPECT_TRUE(ValidateAction(cyc, testing::Generated(cyc.shape(), {testing::CyclicIncrement(cyc.shape()),
                                                                  testing::CyclicRotation(cyc.shape())}))
                  .valid);
  const GroupElement flip_one = testing::MakeElement(chicken.shape(), [](int i, int s) {
    return std::pair{i, i == 0 ? 1 - s : s};
  });
  const GroupAction flipped = testing::Generated(chicken.shape(), {flip_one});
  const ActionValidation bad = ValidateAction(chicken, flipped);
  ASSERT_FALSE(bad.valid);
  ASSERT_TRUE(bad.violation.has_value());
  const ActionViolation& v = *bad.violation;
  const GroupElement& g = flipped.element(v.element);
  EXPECT_NE(chicken.utility(v.player, v.profile),
            chicken.utility(g.image_player(v.player), g.act_on_profile_index(v.profile)));
  EXPECT_THROW(RequireValidAction(chicken, flipped), InputError);
}

TEST(ClassifyAction, Examples) {
  const Shape shape = testing::MatchingPennies().shape();
  const ActionClass g = ClassifyAction(testing::Generated(shape, {testing::PenniesG(shape)}));
  EXPECT_TRUE(g.player_trivial);
  EXPECT_FALSE(g.player_transitive);
  const ActionClass h = ClassifyAction(testing::Generated(shape, {testing::PenniesH(shape)}));
  EXPECT_FALSE(h.player_trivial);
  EXPECT_TRUE(h.player_transitive);
  const ActionClass e = ClassifyAction(TrivialGroup(shape));
  EXPECT_TRUE(e.player_trivial);
  EXPECT_FALSE(e.player_transitive);
  // <h^3> on four players: neither trivial nor transitive.
  const Shape four(std::vector<int>(4, 2));
  const GroupElement rot = testing::MakeElement(four, [](int i, int s) { return std::pair{(i + 1) % 4, s}; });
  const ActionClass half = ClassifyAction(testing::Generated(four, {Compose(rot, rot)}));
  EXPECT_FALSE(half.player_trivial);
  EXPECT_FALSE(half.player_transitive);
}

TEST(ActOnJoint, PenniesH) {
  const Shape shape = testing::MatchingPennies().shape();
  const GroupElement h = testing::PenniesH(shape);
  const JointDistribution hh = JointDistribution(shape, {1, 0, 0, 0});
  // (pi.h)(x) = pi(h.x); h.(H,T) = (H,H).
  EXPECT_EQ(ActOnJoint(h, hh).probabilities(), (RationalVector{0, 0, 1, 0}));
}

TEST(ActOnProfile, PenniesHMatchesJointAction) {
  const Shape shape = testing::MatchingPennies().shape();
  const GroupElement h = testing::PenniesH(shape);
  const ProductProfile heads = ProductProfile::Pure(shape, std::vector<int>{0, 0});
  const ProductProfile image = ActOnProfile(h, heads);
  EXPECT_EQ(image.strategy(0), (RationalVector{1, 0}));
  EXPECT_EQ(image.strategy(1), (RationalVector{0, 1}));
  EXPECT_EQ(ProductToJoint(image), ActOnJoint(h, ProductToJoint(heads)));
}

TEST(ActOnProfile, PropertyCommutesWithProductToJoint) {
  Gen gen(21);
  for (const auto& fx : testing::SymmetricFixtures()) {
    for (int trial = 0; trial < 20; ++trial) {
      const ProductProfile rho = gen.RandomProfile(fx.game.shape(), 25);
      for (const GroupElement& g : fx.group.elements()) {
        EXPECT_EQ(ProductToJoint(ActOnProfile(g, rho)), ActOnJoint(g, ProductToJoint(rho))) << fx.name;
      }
    }
  }
}

TEST(ActOnJoint, PropertyRightAction) {
  Gen gen(22);
  for (const auto& fx : testing::SymmetricFixtures()) {
    const JointDistribution pi = gen.RandomJoint(fx.game.shape(), 30);
    for (const GroupElement& g : fx.group.elements()) {
      for (const GroupElement& h : fx.group.elements()) {
        EXPECT_EQ(ActOnJoint(h, ActOnJoint(g, pi)), ActOnJoint(Compose(g, h), pi)) << fx.name;
      }
    }
  }
}

TEST(AverageOverGroup, PenniesHFromHeads) {
  const Shape shape = testing::MatchingPennies().shape();
  const GroupAction h = testing::Generated(shape, {testing::PenniesH(shape)});
  const ProductProfile avg = AverageOverGroup(h, ProductProfile::Pure(shape, std::vector<int>{0, 0}));
  EXPECT_EQ(avg, ProductProfile::Uniform(shape));
}

TEST(AverageOverGroup, PropertyInvariantAndIdempotent) {
  Gen gen(23);
  for (const auto& fx : testing::SymmetricFixtures()) {
    for (int trial = 0; trial < 20; ++trial) {
      const JointDistribution avg = AverageOverGroup(fx.group, gen.RandomJoint(fx.game.shape(), 30));
      EXPECT_TRUE(IsInvariant(fx.group, avg)) << fx.name;
      EXPECT_EQ(AverageOverGroup(fx.group, avg), avg) << fx.name;
      EXPECT_EQ(Sum(avg.probabilities()), Rational(1));
      const ProductProfile p = AverageOverGroup(fx.group, gen.RandomProfile(fx.game.shape(), 30));
      EXPECT_TRUE(IsInvariant(fx.group, p)) << fx.name;
    }
  }
}

TEST(Orbits, PenniesH) {
  const Shape shape = testing::MatchingPennies().shape();
  const GroupAction h = testing::Generated(shape, {testing::PenniesH(shape)});
  EXPECT_EQ(SlotOrbits(h), (std::vector<std::vector<int>>{{0, 1, 2, 3}}));
  const auto orbits = ProfileOrbits(h);
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.size();
  EXPECT_EQ(total, 4u);
  EXPECT_EQ(Stabilizer(h, 0).order(), 2u);
}

TEST(ActOnSlots, RightAction) {
  const Shape shape = testing::MatchingPennies().shape();
  const GroupElement h = testing::PenniesH(shape);
  const RationalVector x = {1, 2, 3, 4};
  // (x.h)(slot) = x(h(slot)); h: H1->H2, T1->T2, H2->T1, T2->H1.
  EXPECT_EQ(ActOnSlots(h, x), (RationalVector{3, 4, 2, 1}));
}

}  // namespace
}  // namespace xeq
