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

// Powers, contracted powers and symmetrization of games.
//
// Index conventions. In the power of order m there are n*m players; player
// (i, j) (base player i, copy j) has index i*m + j. In the contracted power
// player i picks a tuple (a^1, ..., a^m) encoded as sum_j a^j k_i^j, copy 1
// fastest. With these choices the linear profile index of a tuple of copies
// is the same in both kinds, so one JointDistribution layout serves both.

#ifndef XEQ_GAME_ALGEBRA_H_
#define XEQ_GAME_ALGEBRA_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "xeq/game.h"
#include "xeq/group_action.h"
#include "xeq/rational.h"

namespace xeq {

enum class PowerKind { kPower, kContracted };

inline constexpr std::size_t kDefaultMaxProfiles = 1000000;

struct PowerGame {
  Game base;
  int m = 1;
  PowerKind kind = PowerKind::kPower;
  Game game;  // materialized
};

Shape PowerShape(const Shape& base, int m, PowerKind kind);

// Throws CapExceeded if the materialized game would exceed `max_profiles`.
PowerGame Power(const Game& game, int m, std::size_t max_profiles = kDefaultMaxProfiles);
PowerGame ContractedPower(const Game& game, int m, std::size_t max_profiles = kDefaultMaxProfiles);
PowerGame MakePower(const Game& game, int m, PowerKind kind,
                    std::size_t max_profiles = kDefaultMaxProfiles);

// Base profile index of each copy of a power profile, and the inverse.
std::vector<std::size_t> SplitCopies(const Shape& base, int m, std::size_t profile);
std::size_t JoinCopies(const Shape& base, std::span<const std::size_t> copies);

// Base group acting on every copy at once, together with the copy
// permutations. Validated against the materialized power.
GroupAction PowerAction(const GroupAction& base_group, const PowerGame& power,
                        std::size_t cap = kDefaultGroupCap);

// Keeps copies 1..p of a distribution over m copies.
JointDistribution Marginalize(const JointDistribution& dist, const Shape& base, int m, int p);

// m independent copies of the product distribution.
JointDistribution DiagonalLift(const ProductProfile& profile, int m,
                               std::size_t max_profiles = kDefaultMaxProfiles);
// Player (i, j) of the power plays rho_i.
ProductProfile LiftProfileToPower(const ProductProfile& profile, int m);
// Player i of the contracted power plays rho_i^{(x) m}.
ProductProfile LiftProfileToContracted(const ProductProfile& profile, int m);

// The symmetrized game: every player picks a full base profile, and player
// i earns sum over permutations tau of u_{tau(i)} at the profile whose role
// k is played by the proposal of player tau^{-1}(k). Returned with the
// group generated by the player permutations and, when given, the base
// group acting on proposals.
std::pair<Game, GroupAction> SymmetrizeGame(const Game& game,
                                            const std::optional<GroupAction>& base_group = {},
                                            std::size_t max_profiles = kDefaultMaxProfiles);

// Per-role marginals of a symmetric equilibrium (rho, ..., rho) of the
// symmetrized game. Throws InputError if the input is not symmetric or not
// an equilibrium there; asserts the result is an equilibrium of `game`.
ProductProfile ExtractNashFromSym(const Game& game, const ProductProfile& sym_profile);

}  // namespace xeq

#endif  // XEQ_GAME_ALGEBRA_H_
