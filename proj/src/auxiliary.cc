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

#include <utility>

#include "xeq/error.h"
#include "xeq/kernels.h"

namespace xeq {

DeviationLayout::DeviationLayout(const Shape& shape) : counts_(shape.strategy_counts()) {
  offsets_.resize(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    offsets_[i] = size_;
    size_ += static_cast<std::size_t>(counts_[i]) * counts_[i];
  }
}

DeviationIndex DeviationLayout::deviation(std::size_t column) const {
  XEQ_REQUIRE(column < size_, "deviation column out of range");
  int i = static_cast<int>(counts_.size()) - 1;
  while (offsets_[i] > column) --i;
  const std::size_t local = column - offsets_[i];
  return {i, static_cast<int>(local / counts_[i]), static_cast<int>(local % counts_[i])};
}

ZeroSumGame BuildGamma0(const Game& game) {
  const std::size_t work = game.num_profiles() * DeviationLayout(game.shape()).size();
  return work < kernels::kParallelThreshold ? kernels::Gamma0Serial(game)
                                            : kernels::Gamma0Parallel(game);
}

RationalVector DeviationGains(const Game& game, const JointDistribution& dist) {
  XEQ_REQUIRE(dist.shape() == game.shape(), "distribution does not match the game");
  const std::size_t work = game.num_profiles() * DeviationLayout(game.shape()).size();
  return work < kernels::kParallelThreshold
             ? kernels::DeviationGainsSerial(game, dist.probabilities())
             : kernels::DeviationGainsParallel(game, dist.probabilities());
}

RationalVector DeviationGains(const Game& game, const ProductProfile& profile) {
  XEQ_REQUIRE(profile.shape() == game.shape(), "profile does not match the game");
  const Shape& shape = game.shape();
  const DeviationLayout layout(shape);
  RationalVector out(layout.size(), Rational(0));
  for (int i = 0; i < shape.num_players(); ++i) {
    const RationalVector payoffs = PurePayoffs(game, i, profile);
    const RationalVector& rho = profile.strategy(i);
    for (int r = 0; r < shape.num_strategies(i); ++r) {
      if (sgn(rho[r]) == 0) continue;
      for (int t = 0; t < shape.num_strategies(i); ++t) {
        if (t != r) out[layout.column(i, r, t)] = rho[r] * (payoffs[t] - payoffs[r]);
      }
    }
  }
  return out;
}

Rational Gamma0Payoff(const Game& game, const JointDistribution& dist,
                      std::span<const Rational> y) {
  return -Dot(DeviationGains(game, dist), y);
}

Rational Gamma0Payoff(const Game& game, const ProductProfile& profile,
                      std::span<const Rational> y) {
  return -Dot(DeviationGains(game, profile), y);
}

ZeroSumGame BuildLittleGamma(int num_strategies, std::span<const Rational> weights) {
  const std::size_t k = static_cast<std::size_t>(num_strategies);
  XEQ_REQUIRE(weights.size() == k * k, "response-game weights must be k x k");
  for (const Rational& w : weights) XEQ_REQUIRE(sgn(w) >= 0, "response-game weights must be nonnegative");
  ZeroSumGame out(k, k);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      if (s == t) continue;
      out.at(s, s) += weights[s * k + t];
      out.at(s, t) = -weights[s * k + t];
    }
  }
  return out;
}

void RequireDeviationDistribution(const Shape& shape, std::span<const Rational> y) {
  XEQ_REQUIRE(y.size() == DeviationLayout(shape).size(),
              "deviation distribution has the wrong length");
  XEQ_REQUIRE(IsProbabilityVector(y), "deviation weights must be nonnegative and sum to 1");
}

ProductProfile HsGoodReply(const Game& game, std::span<const Rational> y) {
  const Shape& shape = game.shape();
  RequireDeviationDistribution(shape, y);
  const DeviationLayout layout(shape);
  std::vector<RationalVector> components(shape.num_players());
  for (int i = 0; i < shape.num_players(); ++i) {
    const std::size_t k = shape.num_strategies(i);
    const ZeroSumGame little =
        BuildLittleGamma(static_cast<int>(k), y.subspan(layout.offset(i), k * k));
    const MaximinSolution sol = Maximin(little);
    XEQ_ASSERT(sgn(sol.value) == 0, "response game value must be zero");
    components[i] = sol.max_strategy;
  }
  ProductProfile reply(shape, std::move(components));
  XEQ_ASSERT(sgn(Gamma0Payoff(game, reply, y)) == 0, "good reply must have payoff zero");
  return reply;
}

std::vector<std::size_t> DeviationPermutation(const GroupElement& g) {
  const Shape& shape = g.shape();
  const DeviationLayout layout(shape);
  std::vector<std::size_t> perm(layout.size());
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const DeviationIndex d = layout.deviation(c);
    perm[c] = layout.column(g.image_player(d.player), g.image_strategy(d.player, d.from),
                            g.image_strategy(d.player, d.to));
  }
  return perm;
}

RationalVector ActOnDeviations(const GroupElement& g, std::span<const Rational> y) {
  const std::vector<std::size_t> perm = DeviationPermutation(g);
  XEQ_REQUIRE(y.size() == perm.size(), "deviation vector has the wrong length");
  RationalVector out(y.size());
  for (std::size_t c = 0; c < y.size(); ++c) out[c] = y[perm[c]];
  return out;
}

RationalVector AverageDeviations(const GroupAction& group, std::span<const Rational> y) {
  RationalVector sum(y.size(), Rational(0));
  for (const GroupElement& g : group.elements()) {
    const std::vector<std::size_t> perm = DeviationPermutation(g);
    XEQ_REQUIRE(y.size() == perm.size(), "deviation vector has the wrong length");
    for (std::size_t c = 0; c < y.size(); ++c) sum[c] += y[perm[c]];
  }
  const Rational scale = Fraction(1, static_cast<unsigned long>(group.order()));
  for (Rational& v : sum) v *= scale;
  return sum;
}

ProductProfile SymmetricGoodReply(const Game& game, const GroupAction& group,
                                  std::span<const Rational> y) {
  XEQ_REQUIRE(group.shape() == game.shape(), "group acts on a different game");
  RequireDeviationDistribution(game.shape(), y);
  const RationalVector averaged = AverageDeviations(group, y);
  const ProductProfile reply = AverageOverGroup(group, HsGoodReply(game, averaged));
  XEQ_ASSERT(IsInvariant(group, reply), "symmetric good reply is not invariant");
  XEQ_ASSERT(sgn(Gamma0Payoff(game, reply, y)) == 0, "symmetric good reply must have payoff zero");
  return reply;
}

}  // namespace xeq
