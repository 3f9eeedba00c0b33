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

// Finite groups acting on games.
//
// A group element is a permutation of the disjoint union of strategy sets
// that maps each C_i bijectively onto some C_j; j is the image of player i.
// The induced left action on pure profiles is (g.s)_{g.i} = g.s_i, and
// distributions transform on the right: (pi.g)(s) = pi(g.s). Hence
// (pi.g).h = pi.(g o h) where (g o h)(x) = g(h(x)).

#ifndef XEQ_GROUP_ACTION_H_
#define XEQ_GROUP_ACTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "xeq/game.h"
#include "xeq/rational.h"

namespace xeq {

class GroupElement {
 public:
  GroupElement() = default;
  // `slot_map[x]` is the image of slot x. Validates bijectivity and the
  // block structure; throws InputError otherwise.
  GroupElement(const Shape& shape, std::vector<int> slot_map);

  static GroupElement Identity(const Shape& shape);

  const Shape& shape() const { return shape_; }
  const std::vector<int>& slot_map() const { return slot_map_; }
  const std::vector<int>& player_map() const { return player_map_; }
  int image_player(int player) const { return player_map_[player]; }
  // Image of strategy `s` of `player`, a strategy of image_player(player).
  int image_strategy(int player, int strategy) const {
    return slot_map_[shape_.slot(player, strategy)] - shape_.offset(player_map_[player]);
  }

  // g.s on pure profiles.
  std::size_t act_on_profile_index(std::size_t profile) const;

  bool is_identity() const;
  GroupElement inverse() const;

  bool operator==(const GroupElement& other) const { return slot_map_ == other.slot_map_; }
  bool operator<(const GroupElement& other) const { return slot_map_ < other.slot_map_; }

 private:
  Shape shape_;
  std::vector<int> slot_map_;
  std::vector<int> player_map_;
};

// (g o h)(x) = g(h(x)).
GroupElement Compose(const GroupElement& g, const GroupElement& h);

inline constexpr std::size_t kDefaultGroupCap = 10000;

// A finite group given by an explicit element list. elements()[0] is the
// identity; the list is closed under composition and inverses.
class GroupAction {
 public:
  GroupAction() = default;

  const Shape& shape() const { return shape_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t k) const { return elements_[k]; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  // Position of an element in elements(), or -1.
  long index_of(const GroupElement& g) const;

  bool operator==(const GroupAction& other) const {
    return shape_ == other.shape_ && elements_ == other.elements_;
  }

 private:
  friend GroupAction CloseGroup(const Shape&, std::span<const GroupElement>, std::size_t);
  friend GroupAction Subgroup(const GroupAction&, std::vector<GroupElement>);

  Shape shape_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

// Generated group, ordered breadth-first from the identity (each level
// sorted lexicographically by slot map). Throws CapExceeded past `cap`.
GroupAction CloseGroup(const Shape& shape, std::span<const GroupElement> generators,
                       std::size_t cap = kDefaultGroupCap);
GroupAction TrivialGroup(const Shape& shape);

// Group from a subset of elements that is known to be closed; keeps order.
GroupAction Subgroup(const GroupAction& group, std::vector<GroupElement> elements);

struct ActionViolation {
  std::size_t element;  // index into GroupAction::elements()
  int player;
  std::size_t profile;
};

struct ActionValidation {
  bool valid = true;
  std::optional<ActionViolation> violation;
};

// Checks u_{g.i}(g.s) = u_i(s) for every g, i, s; reports the first failure.
ActionValidation ValidateAction(const Game& game, const GroupAction& group);
// Throws InputError with the witness when the action is not a symmetry.
void RequireValidAction(const Game& game, const GroupAction& group);

struct ActionClass {
  bool player_trivial = false;
  bool player_transitive = false;
};
ActionClass ClassifyAction(const GroupAction& group);

JointDistribution ActOnJoint(const GroupElement& g, const JointDistribution& dist);
ProductProfile ActOnProfile(const GroupElement& g, const ProductProfile& profile);
// Right action on R^{slots}: (x.g)(slot) = x(g(slot)).
RationalVector ActOnSlots(const GroupElement& g, std::span<const Rational> slots);

JointDistribution AverageOverGroup(const GroupAction& group, const JointDistribution& dist);
ProductProfile AverageOverGroup(const GroupAction& group, const ProductProfile& profile);

bool IsInvariant(const GroupAction& group, const JointDistribution& dist);
bool IsInvariant(const GroupAction& group, const ProductProfile& profile);

GroupAction Stabilizer(const GroupAction& group, int player);

// Orbits of the group on slots, each sorted, listed by smallest member.
std::vector<std::vector<int>> SlotOrbits(const GroupAction& group);
// Orbits on pure profiles, same ordering convention.
std::vector<std::vector<std::size_t>> ProfileOrbits(const GroupAction& group);

}  // namespace xeq

#endif  // XEQ_GROUP_ACTION_H_
