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

// The auxiliary deviation game and the per-player response games.
//
// The deviation game is zero-sum. Its maximizer picks a pure profile s; its
// minimizer picks a deviation d = (i, r, t), read "player i switches from r
// to t". The payoff is u_i(s) - u_i(t, s_{-i}) when s_i = r and 0 otherwise,
// so its maximin strategies are exactly the correlated equilibria and its
// value is 0.

#ifndef XEQ_AUXILIARY_H_
#define XEQ_AUXILIARY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "xeq/game.h"
#include "xeq/group_action.h"
#include "xeq/rational.h"
#include "xeq/zerosum_lp.h"

namespace xeq {

struct DeviationIndex {
  int player = 0;
  int from = 0;
  int to = 0;

  bool operator==(const DeviationIndex&) const = default;
};

// Deviation columns: players outer, `from` middle, `to` inner. Columns with
// from == to are kept; they are identically zero.
class DeviationLayout {
 public:
  explicit DeviationLayout(const Shape& shape);

  std::size_t size() const { return size_; }
  std::size_t offset(int player) const { return offsets_[player]; }
  std::size_t column(int player, int from, int to) const {
    return offsets_[player] + static_cast<std::size_t>(from) * counts_[player] + to;
  }
  std::size_t column(const DeviationIndex& d) const { return column(d.player, d.from, d.to); }
  DeviationIndex deviation(std::size_t column) const;

 private:
  std::vector<int> counts_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

// Rows are profiles in the game's index order, columns follow DeviationLayout.
ZeroSumGame BuildGamma0(const Game& game);

// gain_d(pi) = sum_{s: s_i = r} pi(s) [u_i(t, s_{-i}) - u_i(s)] for every
// deviation column d; the payoff of pi against d is -gain_d(pi).
RationalVector DeviationGains(const Game& game, const JointDistribution& dist);
// Same for a product profile, without materializing the joint.
RationalVector DeviationGains(const Game& game, const ProductProfile& profile);

// Maximizer's payoff against a mixed deviation y.
Rational Gamma0Payoff(const Game& game, const JointDistribution& dist, std::span<const Rational> y);
Rational Gamma0Payoff(const Game& game, const ProductProfile& profile, std::span<const Rational> y);

// Response game of one player: `weights` is k x k row-major, weights[r*k+t]
// the weight on switching r -> t (diagonal ignored). Entry (s, t) is the
// total weight leaving s when s == t, and -weights[s*k+t] otherwise.
ZeroSumGame BuildLittleGamma(int num_strategies, std::span<const Rational> weights);

// Profile whose i-th component is the simplex maximin of player i's response
// game; its payoff against y is exactly zero (asserted).
ProductProfile HsGoodReply(const Game& game, std::span<const Rational> y);

// g.(i, r, t) = (g.i, g.r, g.t) as a permutation of deviation columns.
std::vector<std::size_t> DeviationPermutation(const GroupElement& g);
// (y.g)(d) = y(g.d).
RationalVector ActOnDeviations(const GroupElement& g, std::span<const Rational> y);
RationalVector AverageDeviations(const GroupAction& group, std::span<const Rational> y);

// Averages y over the group, takes the good reply, then averages the reply.
// The result is fixed by every element and has payoff zero against y
// (both asserted).
ProductProfile SymmetricGoodReply(const Game& game, const GroupAction& group,
                                  std::span<const Rational> y);

// Requires y to be a distribution over the deviation columns of `shape`.
void RequireDeviationDistribution(const Shape& shape, std::span<const Rational> y);

}  // namespace xeq

#endif  // XEQ_AUXILIARY_H_
