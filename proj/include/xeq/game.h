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

// Finite normal-form games over exact rationals.
//
// Index conventions (used by every file format and module):
//   * Players and strategies are 0-based internally. User-facing text and
//     JSON report players 1-based.
//   * A pure profile s = (s_0, ..., s_{n-1}) has linear index
//       sum_i s_i * stride(i),  stride(0) = 1, stride(i+1) = stride(i) * |C_i|,
//     i.e. player 0's strategy varies fastest.
//   * The disjoint union of all strategy sets ("slots") is indexed by
//       offset(i) + s_i,  offset(0) = 0, offset(i+1) = offset(i) + |C_i|.

#ifndef XEQ_GAME_H_
#define XEQ_GAME_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "xeq/rational.h"

namespace xeq {

// Strategy-count layout shared by games, distributions and group actions.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> strategy_counts);

  int num_players() const { return static_cast<int>(counts_.size()); }
  int num_strategies(int player) const { return counts_[player]; }
  const std::vector<int>& strategy_counts() const { return counts_; }

  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t stride(int player) const { return strides_[player]; }
  int strategy_of(std::size_t profile, int player) const {
    return static_cast<int>((profile / strides_[player]) % counts_[player]);
  }
  // Profile obtained from `profile` by replacing player's strategy.
  std::size_t with_strategy(std::size_t profile, int player, int strategy) const {
    return profile - strategy_of(profile, player) * strides_[player] +
           strategy * strides_[player];
  }
  std::size_t profile_index(std::span<const int> strategies) const;
  std::vector<int> profile_strategies(std::size_t profile) const;

  int num_slots() const { return num_slots_; }
  int offset(int player) const { return offsets_[player]; }
  int slot(int player, int strategy) const { return offsets_[player] + strategy; }
  int player_of_slot(int slot) const;

  // Number of opponent profiles s_{-i}.
  std::size_t num_opponent_profiles(int player) const {
    return num_profiles_ / counts_[player];
  }
  // Index of s_{-i} in the profile space of the other players, keeping
  // the player-0-fastest order with player i removed.
  std::size_t opponent_index(std::size_t profile, int player) const;
  // Inverse of opponent_index with player i set to `strategy`.
  std::size_t join(std::size_t opponent, int player, int strategy) const;

  bool operator==(const Shape& other) const { return counts_ == other.counts_; }

 private:
  std::vector<int> counts_;
  std::vector<std::size_t> strides_;
  std::vector<int> offsets_;
  std::size_t num_profiles_ = 0;
  int num_slots_ = 0;
};

// A finite game with n >= 2 players, |C_i| >= 2 strategies each and one
// dense utility tensor per player.
class Game {
 public:
  Game() = default;
  // `utilities[i]` lists u_i over all profiles in linear index order.
  // `labels` may be empty (defaults to "0", "1", ...).
  Game(std::vector<int> strategy_counts, std::vector<RationalVector> utilities,
       std::vector<std::vector<std::string>> labels = {});

  const Shape& shape() const { return shape_; }
  int num_players() const { return shape_.num_players(); }
  int num_strategies(int player) const { return shape_.num_strategies(player); }
  std::size_t num_profiles() const { return shape_.num_profiles(); }

  const Rational& utility(int player, std::size_t profile) const {
    return utilities_[player][profile];
  }
  const RationalVector& utilities(int player) const { return utilities_[player]; }
  const std::string& label(int player, int strategy) const {
    return labels_[player][strategy];
  }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  // Index of a strategy label, or -1.
  int find_label(int player, const std::string& label) const;
  // Comma separated labels of a pure profile, e.g. "a,b".
  std::string profile_label(std::size_t profile) const;

  bool operator==(const Game& other) const = default;

 private:
  Shape shape_;
  std::vector<RationalVector> utilities_;
  std::vector<std::vector<std::string>> labels_;
};

// A probability distribution over pure profiles.
class JointDistribution {
 public:
  JointDistribution() = default;
  // Validates length, nonnegativity and unit mass.
  JointDistribution(const Shape& shape, RationalVector probabilities);

  static JointDistribution PointMass(const Shape& shape, std::size_t profile);
  static JointDistribution Uniform(const Shape& shape);

  const Shape& shape() const { return shape_; }
  const RationalVector& probabilities() const { return probabilities_; }
  const Rational& operator[](std::size_t profile) const { return probabilities_[profile]; }
  std::size_t size() const { return probabilities_.size(); }

  bool operator==(const JointDistribution& other) const = default;

 private:
  Shape shape_;
  RationalVector probabilities_;
};

// One mixed strategy per player.
class ProductProfile {
 public:
  ProductProfile() = default;
  ProductProfile(const Shape& shape, std::vector<RationalVector> strategies);

  static ProductProfile Uniform(const Shape& shape);
  static ProductProfile Pure(const Shape& shape, std::span<const int> strategies);
  // Builds a profile from a vector over the disjoint union of strategy sets.
  static ProductProfile FromSlots(const Shape& shape, std::span<const Rational> slots);

  const Shape& shape() const { return shape_; }
  int num_players() const { return shape_.num_players(); }
  const RationalVector& strategy(int player) const { return strategies_[player]; }
  const std::vector<RationalVector>& strategies() const { return strategies_; }
  // Concatenation of all mixed strategies (a point of R^{slots}).
  RationalVector slots() const;

  bool operator==(const ProductProfile& other) const = default;

 private:
  Shape shape_;
  std::vector<RationalVector> strategies_;
};

// Validates that `v` is a mixed strategy of length `size`.
void RequireMixedStrategy(std::span<const Rational> v, int size, const char* what);

// u_i(pi) = sum_s u_i(s) pi(s).
Rational ExpectedUtility(const Game& game, int player, const JointDistribution& dist);

// pi(s) = prod_i rho_i(s_i).
JointDistribution ProductToJoint(const ProductProfile& profile);

bool IsZeroSum(const Game& game);

// sigma, tau mixed strategies of `player`; exact equality of
// u_j(sigma, s_{-i}) and u_j(tau, s_{-i}) for every s_{-i} and every j.
bool IsPayoffEquivalent(const Game& game, int player, std::span<const Rational> sigma,
                        std::span<const Rational> tau);

struct BestResponseSet {
  Rational value;
  std::vector<int> strategies;  // ascending; front() is the canonical choice
};

// Best pure responses of `player` to a distribution over opponent profiles
// (indexed by Shape::opponent_index).
BestResponseSet BestResponses(const Game& game, int player,
                              std::span<const Rational> opponent_dist);

// u_i(s_i, rho_{-i}) for every pure s_i of `player`.
RationalVector PurePayoffs(const Game& game, int player, const ProductProfile& profile);

}  // namespace xeq

#endif  // XEQ_GAME_H_
