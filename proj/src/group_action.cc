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

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "xeq/error.h"

namespace xeq {

GroupElement::GroupElement(const Shape& shape, std::vector<int> slot_map)
    : shape_(shape), slot_map_(std::move(slot_map)) {
  const int slots = shape_.num_slots();
  XEQ_REQUIRE(static_cast<int>(slot_map_.size()) == slots,
              "group element must map every strategy slot");
  std::vector<bool> hit(slots, false);
  for (int x = 0; x < slots; ++x) {
    const int y = slot_map_[x];
    XEQ_REQUIRE(y >= 0 && y < slots, "group element maps outside the strategy slots");
    XEQ_REQUIRE(!hit[y], "group element is not a bijection");
    hit[y] = true;
  }
  const int n = shape_.num_players();
  player_map_.assign(n, -1);
  std::vector<bool> player_hit(n, false);
  for (int i = 0; i < n; ++i) {
    const int j = shape_.player_of_slot(slot_map_[shape_.offset(i)]);
    XEQ_REQUIRE(shape_.num_strategies(i) == shape_.num_strategies(j),
                "group element maps player " + std::to_string(i + 1) +
                    " onto a player with a different number of strategies");
    for (int s = 0; s < shape_.num_strategies(i); ++s) {
      XEQ_REQUIRE(shape_.player_of_slot(slot_map_[shape_.slot(i, s)]) == j,
                  "group element splits the strategies of player " + std::to_string(i + 1) +
                      " across players");
    }
    XEQ_REQUIRE(!player_hit[j], "group element does not permute players");
    player_hit[j] = true;
    player_map_[i] = j;
  }
}

GroupElement GroupElement::Identity(const Shape& shape) {
  std::vector<int> map(shape.num_slots());
  for (int x = 0; x < shape.num_slots(); ++x) map[x] = x;
  return GroupElement(shape, std::move(map));
}

std::size_t GroupElement::act_on_profile_index(std::size_t profile) const {
  std::size_t out = 0;
  for (int i = 0; i < shape_.num_players(); ++i) {
    const int j = player_map_[i];
    out += static_cast<std::size_t>(image_strategy(i, shape_.strategy_of(profile, i))) *
           shape_.stride(j);
  }
  return out;
}

bool GroupElement::is_identity() const {
  for (std::size_t x = 0; x < slot_map_.size(); ++x) {
    if (slot_map_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

GroupElement GroupElement::inverse() const {
  std::vector<int> inv(slot_map_.size());
  for (std::size_t x = 0; x < slot_map_.size(); ++x) inv[slot_map_[x]] = static_cast<int>(x);
  return GroupElement(shape_, std::move(inv));
}

GroupElement Compose(const GroupElement& g, const GroupElement& h) {
  XEQ_REQUIRE(g.shape() == h.shape(), "composing elements acting on different games");
  std::vector<int> map(h.slot_map().size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = g.slot_map()[h.slot_map()[x]];
  return GroupElement(g.shape(), std::move(map));
}

long GroupAction::index_of(const GroupElement& g) const {
  const auto it = std::find(elements_.begin(), elements_.end(), g);
  return it == elements_.end() ? -1 : static_cast<long>(it - elements_.begin());
}

GroupAction CloseGroup(const Shape& shape, std::span<const GroupElement> generators,
                       std::size_t cap) {
  for (const GroupElement& g : generators) {
    XEQ_REQUIRE(g.shape() == shape, "generator acts on a different game");
  }
  GroupAction out;
  out.shape_ = shape;
  out.generators_.assign(generators.begin(), generators.end());
  std::set<GroupElement> seen;
  std::vector<GroupElement> level{GroupElement::Identity(shape)};
  seen.insert(level.front());
  while (!level.empty()) {
    for (const GroupElement& g : level) out.elements_.push_back(g);
    std::vector<GroupElement> next;
    for (const GroupElement& g : level) {
      for (const GroupElement& gen : generators) {
        GroupElement product = Compose(gen, g);
        if (seen.insert(product).second) {
          if (seen.size() > cap) {
            throw CapExceeded("group closure exceeds the cap of " + std::to_string(cap) +
                              " elements");
          }
          next.push_back(std::move(product));
        }
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

GroupAction TrivialGroup(const Shape& shape) { return CloseGroup(shape, {}); }

GroupAction Subgroup(const GroupAction& group, std::vector<GroupElement> elements) {
  GroupAction out;
  out.shape_ = group.shape();
  out.elements_ = std::move(elements);
  XEQ_ASSERT(!out.elements_.empty() && out.elements_.front().is_identity(),
             "subgroup must start with the identity");
  out.generators_.assign(out.elements_.begin() + 1, out.elements_.end());
  return out;
}

ActionValidation ValidateAction(const Game& game, const GroupAction& group) {
  XEQ_REQUIRE(group.shape() == game.shape(), "group acts on a different game");
  ActionValidation result;
  for (std::size_t k = 0; k < group.order(); ++k) {
    const GroupElement& g = group.element(k);
    for (std::size_t s = 0; s < game.num_profiles(); ++s) {
      const std::size_t gs = g.act_on_profile_index(s);
      for (int i = 0; i < game.num_players(); ++i) {
        if (game.utility(g.image_player(i), gs) != game.utility(i, s)) {
          result.valid = false;
          result.violation = ActionViolation{k, i, s};
          return result;
        }
      }
    }
  }
  return result;
}

void RequireValidAction(const Game& game, const GroupAction& group) {
  const ActionValidation v = ValidateAction(game, group);
  if (!v.valid) {
    throw InputError("group does not act on the game: element " +
                     std::to_string(v.violation->element) + " breaks the utility of player " +
                     std::to_string(v.violation->player + 1) + " at profile (" +
                     game.profile_label(v.violation->profile) + ")");
  }
}

ActionClass ClassifyAction(const GroupAction& group) {
  const int n = group.shape().num_players();
  ActionClass out;
  out.player_trivial = true;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (const GroupElement& g : group.elements()) {
    for (int i = 0; i < n; ++i) {
      if (g.image_player(i) != i) out.player_trivial = false;
    }
    reached[g.image_player(0)] = true;
  }
  // Orbit of player 0 covers everybody iff the action is transitive.
  out.player_transitive = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
  return out;
}

JointDistribution ActOnJoint(const GroupElement& g, const JointDistribution& dist) {
  XEQ_REQUIRE(g.shape() == dist.shape(), "group element acts on a different game");
  RationalVector out(dist.size());
  for (std::size_t s = 0; s < dist.size(); ++s) out[s] = dist[g.act_on_profile_index(s)];
  return JointDistribution(dist.shape(), std::move(out));
}

RationalVector ActOnSlots(const GroupElement& g, std::span<const Rational> slots) {
  XEQ_REQUIRE(static_cast<int>(slots.size()) == g.shape().num_slots(), "slot vector length");
  RationalVector out(slots.size());
  for (std::size_t x = 0; x < slots.size(); ++x) out[x] = slots[g.slot_map()[x]];
  return out;
}

ProductProfile ActOnProfile(const GroupElement& g, const ProductProfile& profile) {
  XEQ_REQUIRE(g.shape() == profile.shape(), "group element acts on a different game");
  return ProductProfile::FromSlots(profile.shape(), ActOnSlots(g, profile.slots()));
}

JointDistribution AverageOverGroup(const GroupAction& group, const JointDistribution& dist) {
  XEQ_REQUIRE(group.shape() == dist.shape(), "group acts on a different game");
  RationalVector sum(dist.size(), Rational(0));
  for (const GroupElement& g : group.elements()) {
    for (std::size_t s = 0; s < dist.size(); ++s) sum[s] += dist[g.act_on_profile_index(s)];
  }
  const Rational scale = Fraction(1, static_cast<unsigned long>(group.order()));
  for (Rational& v : sum) v *= scale;
  return JointDistribution(dist.shape(), std::move(sum));
}

ProductProfile AverageOverGroup(const GroupAction& group, const ProductProfile& profile) {
  XEQ_REQUIRE(group.shape() == profile.shape(), "group acts on a different game");
  const RationalVector slots = profile.slots();
  RationalVector sum(slots.size(), Rational(0));
  for (const GroupElement& g : group.elements()) {
    for (std::size_t x = 0; x < slots.size(); ++x) sum[x] += slots[g.slot_map()[x]];
  }
  const Rational scale = Fraction(1, static_cast<unsigned long>(group.order()));
  for (Rational& v : sum) v *= scale;
  return ProductProfile::FromSlots(profile.shape(), sum);
}

bool IsInvariant(const GroupAction& group, const JointDistribution& dist) {
  for (const GroupElement& g : group.elements()) {
    for (std::size_t s = 0; s < dist.size(); ++s) {
      if (dist[g.act_on_profile_index(s)] != dist[s]) return false;
    }
  }
  return true;
}

bool IsInvariant(const GroupAction& group, const ProductProfile& profile) {
  const RationalVector slots = profile.slots();
  for (const GroupElement& g : group.elements()) {
    for (std::size_t x = 0; x < slots.size(); ++x) {
      if (slots[g.slot_map()[x]] != slots[x]) return false;
    }
  }
  return true;
}

GroupAction Stabilizer(const GroupAction& group, int player) {
  XEQ_REQUIRE(player >= 0 && player < group.shape().num_players(), "player index out of range");
  std::vector<GroupElement> kept;
  for (const GroupElement& g : group.elements()) {
    if (g.image_player(player) == player) kept.push_back(g);
  }
  return Subgroup(group, std::move(kept));
}

std::vector<std::vector<int>> SlotOrbits(const GroupAction& group) {
  const int slots = group.shape().num_slots();
  std::vector<bool> done(slots, false);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < slots; ++x) {
    if (done[x]) continue;
    std::set<int> orbit;
    for (const GroupElement& g : group.elements()) orbit.insert(g.slot_map()[x]);
    for (int y : orbit) done[y] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<std::vector<std::size_t>> ProfileOrbits(const GroupAction& group) {
  const std::size_t profiles = group.shape().num_profiles();
  std::vector<bool> done(profiles, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < profiles; ++s) {
    if (done[s]) continue;
    std::set<std::size_t> orbit;
    for (const GroupElement& g : group.elements()) orbit.insert(g.act_on_profile_index(s));
    for (std::size_t t : orbit) done[t] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace xeq
