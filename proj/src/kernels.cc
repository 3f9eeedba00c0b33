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

#include "xeq/kernels.h"

#include "xeq/auxiliary.h"
#include "xeq/error.h"

namespace xeq::kernels {
namespace {

// Gain of one deviation column, summing over opponent profiles in order.
Rational GainOf(const Game& game, std::span<const Rational> dist, const DeviationIndex& d) {
  const Shape& shape = game.shape();
  Rational gain = 0;
  if (d.from == d.to) return gain;
  const RationalVector& u = game.utilities(d.player);
  for (std::size_t o = 0; o < shape.num_opponent_profiles(d.player); ++o) {
    const std::size_t s = shape.join(o, d.player, d.from);
    if (sgn(dist[s]) == 0) continue;
    const std::size_t t = shape.join(o, d.player, d.to);
    gain += dist[s] * (u[t] - u[s]);
  }
  return gain;
}

void FillGamma0Row(const Game& game, const DeviationLayout& layout, std::size_t s,
                   ZeroSumGame& out) {
  const Shape& shape = game.shape();
  for (int i = 0; i < shape.num_players(); ++i) {
    const int r = shape.strategy_of(s, i);
    const Rational& base = game.utility(i, s);
    for (int t = 0; t < shape.num_strategies(i); ++t) {
      if (t == r) continue;
      out.at(s, layout.column(i, r, t)) = base - game.utility(i, shape.with_strategy(s, i, t));
    }
  }
}

}  // namespace

RationalVector DeviationGainsSerial(const Game& game, std::span<const Rational> dist) {
  XEQ_REQUIRE(dist.size() == game.num_profiles(), "distribution does not match the game");
  const DeviationLayout layout(game.shape());
  RationalVector out(layout.size());
  for (std::size_t c = 0; c < layout.size(); ++c) out[c] = GainOf(game, dist, layout.deviation(c));
  return out;
}

RationalVector DeviationGainsParallel(const Game& game, std::span<const Rational> dist) {
  XEQ_REQUIRE(dist.size() == game.num_profiles(), "distribution does not match the game");
  const DeviationLayout layout(game.shape());
  const long cols = static_cast<long>(layout.size());
  RationalVector out(layout.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long c = 0; c < cols; ++c) out[c] = GainOf(game, dist, layout.deviation(c));
  return out;
}

ZeroSumGame Gamma0Serial(const Game& game) {
  const DeviationLayout layout(game.shape());
  ZeroSumGame out(game.num_profiles(), layout.size());
  for (std::size_t s = 0; s < game.num_profiles(); ++s) FillGamma0Row(game, layout, s, out);
  return out;
}

ZeroSumGame Gamma0Parallel(const Game& game) {
  const DeviationLayout layout(game.shape());
  ZeroSumGame out(game.num_profiles(), layout.size());
  const long rows = static_cast<long>(game.num_profiles());
#pragma omp parallel for schedule(static)
  for (long s = 0; s < rows; ++s) FillGamma0Row(game, layout, s, out);
  return out;
}

}  // namespace xeq::kernels
