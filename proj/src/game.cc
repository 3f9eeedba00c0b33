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

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "xeq/error.h"

namespace xeq {

Shape::Shape(std::vector<int> strategy_counts) : counts_(std::move(strategy_counts)) {
  strides_.resize(counts_.size());
  offsets_.resize(counts_.size());
  std::size_t stride = 1;
  int offset = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    XEQ_REQUIRE(counts_[i] >= 1, "strategy counts must be positive");
    strides_[i] = stride;
    offsets_[i] = offset;
    XEQ_REQUIRE(stride <= std::numeric_limits<std::size_t>::max() /
                              static_cast<std::size_t>(counts_[i]),
                "profile space too large");
    stride *= static_cast<std::size_t>(counts_[i]);
    offset += counts_[i];
  }
  num_profiles_ = stride;
  num_slots_ = offset;
}

std::size_t Shape::profile_index(std::span<const int> strategies) const {
  XEQ_REQUIRE(strategies.size() == counts_.size(), "profile has wrong number of players");
  std::size_t index = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    XEQ_REQUIRE(strategies[i] >= 0 && strategies[i] < counts_[i],
                "strategy index out of range");
    index += static_cast<std::size_t>(strategies[i]) * strides_[i];
  }
  return index;
}

std::vector<int> Shape::profile_strategies(std::size_t profile) const {
  std::vector<int> out(counts_.size());
  for (int i = 0; i < num_players(); ++i) out[i] = strategy_of(profile, i);
  return out;
}

int Shape::player_of_slot(int slot) const {
  XEQ_REQUIRE(slot >= 0 && slot < num_slots_, "slot out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), slot);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::size_t Shape::opponent_index(std::size_t profile, int player) const {
  const std::size_t low = profile % strides_[player];
  const std::size_t high = profile / (strides_[player] * counts_[player]);
  return low + high * strides_[player];
}

std::size_t Shape::join(std::size_t opponent, int player, int strategy) const {
  const std::size_t low = opponent % strides_[player];
  const std::size_t high = opponent / strides_[player];
  return low + strategy * strides_[player] + high * strides_[player] * counts_[player];
}

Game::Game(std::vector<int> strategy_counts, std::vector<RationalVector> utilities,
           std::vector<std::vector<std::string>> labels)
    : shape_(std::move(strategy_counts)),
      utilities_(std::move(utilities)),
      labels_(std::move(labels)) {
  const int n = shape_.num_players();
  XEQ_REQUIRE(n >= 2, "a game needs at least two players");
  for (int i = 0; i < n; ++i) {
    XEQ_REQUIRE(shape_.num_strategies(i) >= 2,
                "player " + std::to_string(i + 1) + " needs at least two strategies");
  }
  XEQ_REQUIRE(static_cast<int>(utilities_.size()) == n,
              "expected one utility tensor per player");
  for (int i = 0; i < n; ++i) {
    XEQ_REQUIRE(utilities_[i].size() == shape_.num_profiles(),
                "utility tensor of player " + std::to_string(i + 1) + " has " +
                    std::to_string(utilities_[i].size()) + " entries, expected " +
                    std::to_string(shape_.num_profiles()));
  }
  if (labels_.empty()) {
    labels_.resize(n);
    for (int i = 0; i < n; ++i) {
      for (int s = 0; s < shape_.num_strategies(i); ++s) {
        labels_[i].push_back(std::to_string(s));
      }
    }
  }
  XEQ_REQUIRE(static_cast<int>(labels_.size()) == n, "expected labels for every player");
  for (int i = 0; i < n; ++i) {
    XEQ_REQUIRE(static_cast<int>(labels_[i].size()) == shape_.num_strategies(i),
                "label count mismatch for player " + std::to_string(i + 1));
    std::vector<std::string> sorted = labels_[i];
    std::sort(sorted.begin(), sorted.end());
    XEQ_REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "duplicate strategy label for player " + std::to_string(i + 1));
  }
}

int Game::find_label(int player, const std::string& label) const {
  const auto& names = labels_[player];
  const auto it = std::find(names.begin(), names.end(), label);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

std::string Game::profile_label(std::size_t profile) const {
  std::string out;
  for (int i = 0; i < num_players(); ++i) {
    if (i > 0) out += ',';
    out += labels_[i][shape_.strategy_of(profile, i)];
  }
  return out;
}

JointDistribution::JointDistribution(const Shape& shape, RationalVector probabilities)
    : shape_(shape), probabilities_(std::move(probabilities)) {
  XEQ_REQUIRE(probabilities_.size() == shape_.num_profiles(),
              "distribution has " + std::to_string(probabilities_.size()) +
                  " entries, expected " + std::to_string(shape_.num_profiles()));
  XEQ_REQUIRE(IsProbabilityVector(probabilities_),
              "distribution must be nonnegative and sum to 1");
}

JointDistribution JointDistribution::PointMass(const Shape& shape, std::size_t profile) {
  XEQ_REQUIRE(profile < shape.num_profiles(), "profile out of range");
  RationalVector p(shape.num_profiles(), Rational(0));
  p[profile] = 1;
  return JointDistribution(shape, std::move(p));
}

JointDistribution JointDistribution::Uniform(const Shape& shape) {
  const Rational w = Fraction(1, static_cast<unsigned long>(shape.num_profiles()));
  return JointDistribution(shape, RationalVector(shape.num_profiles(), w));
}

void RequireMixedStrategy(std::span<const Rational> v, int size, const char* what) {
  XEQ_REQUIRE(static_cast<int>(v.size()) == size,
              std::string(what) + " has length " + std::to_string(v.size()) +
                  ", expected " + std::to_string(size));
  XEQ_REQUIRE(IsProbabilityVector(v),
              std::string(what) + " must be nonnegative and sum to 1");
}

ProductProfile::ProductProfile(const Shape& shape, std::vector<RationalVector> strategies)
    : shape_(shape), strategies_(std::move(strategies)) {
  XEQ_REQUIRE(static_cast<int>(strategies_.size()) == shape_.num_players(),
              "profile must list one mixed strategy per player");
  for (int i = 0; i < shape_.num_players(); ++i) {
    const std::string what = "mixed strategy of player " + std::to_string(i + 1);
    RequireMixedStrategy(strategies_[i], shape_.num_strategies(i), what.c_str());
  }
}

ProductProfile ProductProfile::Uniform(const Shape& shape) {
  std::vector<RationalVector> s;
  for (int i = 0; i < shape.num_players(); ++i) {
    const int k = shape.num_strategies(i);
    s.emplace_back(k, Fraction(1, k));
  }
  return ProductProfile(shape, std::move(s));
}

ProductProfile ProductProfile::Pure(const Shape& shape, std::span<const int> strategies) {
  XEQ_REQUIRE(static_cast<int>(strategies.size()) == shape.num_players(),
              "pure profile has wrong number of players");
  std::vector<RationalVector> s;
  for (int i = 0; i < shape.num_players(); ++i) {
    RationalVector v(shape.num_strategies(i), Rational(0));
    XEQ_REQUIRE(strategies[i] >= 0 && strategies[i] < shape.num_strategies(i),
                "strategy index out of range");
    v[strategies[i]] = 1;
    s.push_back(std::move(v));
  }
  return ProductProfile(shape, std::move(s));
}

ProductProfile ProductProfile::FromSlots(const Shape& shape, std::span<const Rational> slots) {
  XEQ_REQUIRE(static_cast<int>(slots.size()) == shape.num_slots(), "slot vector length");
  std::vector<RationalVector> s;
  for (int i = 0; i < shape.num_players(); ++i) {
    const auto first = slots.begin() + shape.offset(i);
    s.emplace_back(first, first + shape.num_strategies(i));
  }
  return ProductProfile(shape, std::move(s));
}

RationalVector ProductProfile::slots() const {
  RationalVector out;
  out.reserve(shape_.num_slots());
  for (const auto& v : strategies_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Rational ExpectedUtility(const Game& game, int player, const JointDistribution& dist) {
  XEQ_REQUIRE(player >= 0 && player < game.num_players(), "player index out of range");
  XEQ_REQUIRE(dist.shape() == game.shape(), "distribution does not match the game");
  return Dot(game.utilities(player), dist.probabilities());
}

JointDistribution ProductToJoint(const ProductProfile& profile) {
  const Shape& shape = profile.shape();
  RationalVector p(shape.num_profiles());
  for (std::size_t s = 0; s < shape.num_profiles(); ++s) {
    Rational w = 1;
    for (int i = 0; i < shape.num_players() && sgn(w) != 0; ++i) {
      w *= profile.strategy(i)[shape.strategy_of(s, i)];
    }
    p[s] = std::move(w);
  }
  return JointDistribution(shape, std::move(p));
}

bool IsZeroSum(const Game& game) {
  if (game.num_players() != 2) return false;
  for (std::size_t s = 0; s < game.num_profiles(); ++s) {
    if (game.utility(0, s) + game.utility(1, s) != 0) return false;
  }
  return true;
}

bool IsPayoffEquivalent(const Game& game, int player, std::span<const Rational> sigma,
                        std::span<const Rational> tau) {
  XEQ_REQUIRE(player >= 0 && player < game.num_players(), "player index out of range");
  const Shape& shape = game.shape();
  RequireMixedStrategy(sigma, shape.num_strategies(player), "sigma");
  RequireMixedStrategy(tau, shape.num_strategies(player), "tau");
  for (int j = 0; j < game.num_players(); ++j) {
    for (std::size_t o = 0; o < shape.num_opponent_profiles(player); ++o) {
      Rational diff = 0;
      for (int a = 0; a < shape.num_strategies(player); ++a) {
        const Rational w = sigma[a] - tau[a];
        if (sgn(w) != 0) diff += w * game.utility(j, shape.join(o, player, a));
      }
      if (sgn(diff) != 0) return false;
    }
  }
  return true;
}

BestResponseSet BestResponses(const Game& game, int player,
                              std::span<const Rational> opponent_dist) {
  XEQ_REQUIRE(player >= 0 && player < game.num_players(), "player index out of range");
  const Shape& shape = game.shape();
  XEQ_REQUIRE(opponent_dist.size() == shape.num_opponent_profiles(player),
              "opponent distribution has wrong length");
  XEQ_REQUIRE(IsProbabilityVector(opponent_dist),
              "opponent distribution must be nonnegative and sum to 1");
  BestResponseSet out;
  for (int a = 0; a < shape.num_strategies(player); ++a) {
    Rational value = 0;
    for (std::size_t o = 0; o < opponent_dist.size(); ++o) {
      if (sgn(opponent_dist[o]) != 0) {
        value += opponent_dist[o] * game.utility(player, shape.join(o, player, a));
      }
    }
    if (out.strategies.empty() || value > out.value) {
      out.value = value;
      out.strategies = {a};
    } else if (value == out.value) {
      out.strategies.push_back(a);
    }
  }
  return out;
}

RationalVector PurePayoffs(const Game& game, int player, const ProductProfile& profile) {
  XEQ_REQUIRE(player >= 0 && player < game.num_players(), "player index out of range");
  XEQ_REQUIRE(profile.shape() == game.shape(), "profile does not match the game");
  const Shape& shape = game.shape();
  RationalVector out(shape.num_strategies(player), Rational(0));
  for (std::size_t s = 0; s < shape.num_profiles(); ++s) {
    Rational w = 1;
    for (int j = 0; j < shape.num_players() && sgn(w) != 0; ++j) {
      if (j != player) w *= profile.strategy(j)[shape.strategy_of(s, j)];
    }
    if (sgn(w) != 0) out[shape.strategy_of(s, player)] += w * game.utility(player, s);
  }
  return out;
}

}  // namespace xeq
