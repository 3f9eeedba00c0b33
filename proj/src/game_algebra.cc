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

#include "xeq/game_algebra.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "xeq/equilibria.h"
#include "xeq/error.h"

namespace xeq {
namespace {

// Product of `factors` or CapExceeded once it passes `cap`.
std::size_t CappedProduct(std::span<const std::size_t> factors, std::size_t cap, const char* what) {
  std::size_t out = 1;
  for (std::size_t f : factors) {
    if (f != 0 && out > cap / f) {
      throw CapExceeded(std::string(what) + " exceeds the cap of " + std::to_string(cap) +
                        " profiles");
    }
    out *= f;
  }
  if (out > cap) {
    throw CapExceeded(std::string(what) + " exceeds the cap of " + std::to_string(cap) +
                      " profiles");
  }
  return out;
}

void RequireOrder(int m) { XEQ_REQUIRE(m >= 1, "power order m must be at least 1"); }

std::vector<int> CopyDigits(int count, int m, int code) {
  std::vector<int> digits(m);
  for (int j = 0; j < m; ++j) {
    digits[j] = code % count;
    code /= count;
  }
  return digits;
}

int EncodeDigits(int count, std::span<const int> digits) {
  int code = 0;
  for (int j = static_cast<int>(digits.size()) - 1; j >= 0; --j) code = code * count + digits[j];
  return code;
}

}  // namespace

Shape PowerShape(const Shape& base, int m, PowerKind kind) {
  RequireOrder(m);
  std::vector<int> counts;
  for (int i = 0; i < base.num_players(); ++i) {
    const int k = base.num_strategies(i);
    if (kind == PowerKind::kPower) {
      for (int j = 0; j < m; ++j) counts.push_back(k);
    } else {
      long long size = 1;
      for (int j = 0; j < m; ++j) {
        size *= k;
        XEQ_REQUIRE(size <= (1LL << 30), "contracted strategy set is too large");
      }
      counts.push_back(static_cast<int>(size));
    }
  }
  return Shape(std::move(counts));
}

std::vector<std::size_t> SplitCopies(const Shape& base, int m, std::size_t profile) {
  std::vector<std::size_t> copies(m, 0);
  for (int i = 0; i < base.num_players(); ++i) {
    const std::size_t k = base.num_strategies(i);
    for (int j = 0; j < m; ++j) {
      copies[j] += (profile % k) * base.stride(i);
      profile /= k;
    }
  }
  return copies;
}

std::size_t JoinCopies(const Shape& base, std::span<const std::size_t> copies) {
  std::size_t profile = 0;
  std::size_t multiplier = 1;
  for (int i = 0; i < base.num_players(); ++i) {
    const std::size_t k = base.num_strategies(i);
    for (std::size_t copy : copies) {
      profile += base.strategy_of(copy, i) * multiplier;
      multiplier *= k;
    }
  }
  return profile;
}

PowerGame MakePower(const Game& game, int m, PowerKind kind, std::size_t max_profiles) {
  RequireOrder(m);
  const Shape& base = game.shape();
  const int n = base.num_players();
  std::vector<std::size_t> factors(m, base.num_profiles());
  const std::size_t profiles = CappedProduct(factors, max_profiles, "power game");
  const Shape shape = PowerShape(base, m, kind);
  XEQ_ASSERT(shape.num_profiles() == profiles, "power profile count");

  const int players = kind == PowerKind::kPower ? n * m : n;
  std::vector<RationalVector> utilities(players, RationalVector(profiles));
  for (std::size_t s = 0; s < profiles; ++s) {
    const std::vector<std::size_t> copies = SplitCopies(base, m, s);
    for (int i = 0; i < n; ++i) {
      if (kind == PowerKind::kPower) {
        for (int j = 0; j < m; ++j) utilities[i * m + j][s] = game.utility(i, copies[j]);
      } else {
        Rational total = 0;
        for (int j = 0; j < m; ++j) total += game.utility(i, copies[j]);
        utilities[i][s] = std::move(total);
      }
    }
  }

  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i < n; ++i) {
    const int k = base.num_strategies(i);
    if (kind == PowerKind::kPower) {
      for (int j = 0; j < m; ++j) labels.push_back(game.labels()[i]);
    } else {
      std::vector<std::string> tuple_labels;
      for (int code = 0; code < shape.num_strategies(i); ++code) {
        const std::vector<int> digits = CopyDigits(k, m, code);
        std::string label;
        for (int j = 0; j < m; ++j) label += (j ? "." : "") + game.label(i, digits[j]);
        tuple_labels.push_back(std::move(label));
      }
      labels.push_back(std::move(tuple_labels));
    }
  }
  return PowerGame{game, m, kind,
                   Game(shape.strategy_counts(), std::move(utilities), std::move(labels))};
}

PowerGame Power(const Game& game, int m, std::size_t max_profiles) {
  return MakePower(game, m, PowerKind::kPower, max_profiles);
}

PowerGame ContractedPower(const Game& game, int m, std::size_t max_profiles) {
  return MakePower(game, m, PowerKind::kContracted, max_profiles);
}

GroupAction PowerAction(const GroupAction& base_group, const PowerGame& power, std::size_t cap) {
  const Shape& base = power.base.shape();
  XEQ_REQUIRE(base_group.shape() == base, "group acts on a different game");
  const Shape& shape = power.game.shape();
  const int m = power.m;

  // Slot map from a rule (player, strategy) -> (player, strategy).
  auto build = [&](auto rule) {
    std::vector<int> map(shape.num_slots());
    for (int p = 0; p < shape.num_players(); ++p) {
      for (int a = 0; a < shape.num_strategies(p); ++a) {
        const auto [q, b] = rule(p, a);
        map[shape.slot(p, a)] = shape.slot(q, b);
      }
    }
    return GroupElement(shape, std::move(map));
  };

  std::vector<GroupElement> generators;
  for (const GroupElement& g : base_group.generators()) {
    if (power.kind == PowerKind::kPower) {
      generators.push_back(build([&](int p, int a) {
        const int i = p / m, j = p % m;
        return std::pair{g.image_player(i) * m + j, g.image_strategy(i, a)};
      }));
    } else {
      generators.push_back(build([&](int i, int a) {
        std::vector<int> digits = CopyDigits(base.num_strategies(i), m, a);
        for (int& d : digits) d = g.image_strategy(i, d);
        return std::pair{g.image_player(i), EncodeDigits(base.num_strategies(i), digits)};
      }));
    }
  }
  for (int j = 0; j + 1 < m; ++j) {
    if (power.kind == PowerKind::kPower) {
      generators.push_back(build([&](int p, int a) {
        const int i = p / m;
        int c = p % m;
        c = c == j ? j + 1 : (c == j + 1 ? j : c);
        return std::pair{i * m + c, a};
      }));
    } else {
      generators.push_back(build([&](int i, int a) {
        std::vector<int> digits = CopyDigits(base.num_strategies(i), m, a);
        std::swap(digits[j], digits[j + 1]);
        return std::pair{i, EncodeDigits(base.num_strategies(i), digits)};
      }));
    }
  }
  GroupAction group = CloseGroup(shape, generators, cap);
  XEQ_ASSERT(ValidateAction(power.game, group).valid, "power action breaks utilities");
  return group;
}

JointDistribution Marginalize(const JointDistribution& dist, const Shape& base, int m, int p) {
  RequireOrder(m);
  XEQ_REQUIRE(p >= 1 && p <= m, "marginal order must lie in 1..m");
  XEQ_REQUIRE(dist.size() == PowerShape(base, m, PowerKind::kPower).num_profiles(),
              "distribution does not live on the power profile space");
  const Shape out_shape = PowerShape(base, p, PowerKind::kPower);
  RationalVector out(out_shape.num_profiles(), Rational(0));
  for (std::size_t s = 0; s < dist.size(); ++s) {
    if (sgn(dist[s]) == 0) continue;
    std::vector<std::size_t> copies = SplitCopies(base, m, s);
    copies.resize(p);
    out[JoinCopies(base, copies)] += dist[s];
  }
  return JointDistribution(p == 1 ? base : out_shape, std::move(out));
}

ProductProfile LiftProfileToPower(const ProductProfile& profile, int m) {
  RequireOrder(m);
  const Shape& base = profile.shape();
  std::vector<RationalVector> strategies;
  for (int i = 0; i < base.num_players(); ++i) {
    for (int j = 0; j < m; ++j) strategies.push_back(profile.strategy(i));
  }
  return ProductProfile(PowerShape(base, m, PowerKind::kPower), std::move(strategies));
}

ProductProfile LiftProfileToContracted(const ProductProfile& profile, int m) {
  RequireOrder(m);
  const Shape& base = profile.shape();
  const Shape shape = PowerShape(base, m, PowerKind::kContracted);
  std::vector<RationalVector> strategies;
  for (int i = 0; i < base.num_players(); ++i) {
    const int k = base.num_strategies(i);
    RationalVector tuple(shape.num_strategies(i));
    for (int code = 0; code < shape.num_strategies(i); ++code) {
      Rational prob = 1;
      for (int d : CopyDigits(k, m, code)) prob *= profile.strategy(i)[d];
      tuple[code] = std::move(prob);
    }
    strategies.push_back(std::move(tuple));
  }
  return ProductProfile(shape, std::move(strategies));
}

JointDistribution DiagonalLift(const ProductProfile& profile, int m, std::size_t max_profiles) {
  RequireOrder(m);
  std::vector<std::size_t> factors(m, profile.shape().num_profiles());
  CappedProduct(factors, max_profiles, "lifted distribution");
  return ProductToJoint(LiftProfileToPower(profile, m));
}

namespace {

Game SymmetrizedUtilities(const Game& game, std::size_t max_profiles) {
  const Shape& base = game.shape();
  const int n = base.num_players();
  const std::size_t proposals = base.num_profiles();
  XEQ_REQUIRE(proposals <= (1u << 30), "base game too large to symmetrize");
  std::vector<std::size_t> factors(n, proposals);
  const std::size_t profiles = CappedProduct(factors, max_profiles, "symmetrized game");
  const Shape shape(std::vector<int>(n, static_cast<int>(proposals)));

  std::vector<RationalVector> utilities(n, RationalVector(profiles, Rational(0)));
  std::vector<int> sigma(n);  // sigma[k]: the player whose proposal fills role k
  for (std::size_t s = 0; s < profiles; ++s) {
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::size_t d = 0;
      for (int k = 0; k < n; ++k) {
        const std::size_t proposal = shape.strategy_of(s, sigma[k]);
        d += base.strategy_of(proposal, k) * base.stride(k);
      }
      for (int k = 0; k < n; ++k) utilities[sigma[k]][s] += game.utility(k, d);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  std::vector<std::string> proposal_labels;
  for (std::size_t x = 0; x < proposals; ++x) proposal_labels.push_back(game.profile_label(x));
  return Game(shape.strategy_counts(), std::move(utilities),
              std::vector<std::vector<std::string>>(n, proposal_labels));
}

}  // namespace

std::pair<Game, GroupAction> SymmetrizeGame(const Game& game,
                                            const std::optional<GroupAction>& base_group,
                                            std::size_t max_profiles) {
  Game sym = SymmetrizedUtilities(game, max_profiles);
  const Shape& shape = sym.shape();
  const int n = shape.num_players();
  const int proposals = shape.num_strategies(0);

  std::vector<GroupElement> generators;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> map(shape.num_slots());
    for (int p = 0; p < n; ++p) {
      const int q = p == i ? i + 1 : (p == i + 1 ? i : p);
      for (int x = 0; x < proposals; ++x) map[shape.slot(p, x)] = shape.slot(q, x);
    }
    generators.emplace_back(shape, std::move(map));
  }
  if (base_group) {
    XEQ_REQUIRE(base_group->shape() == game.shape(), "group acts on a different game");
    for (const GroupElement& g : base_group->generators()) {
      std::vector<int> map(shape.num_slots());
      for (int p = 0; p < n; ++p) {
        for (int x = 0; x < proposals; ++x) {
          map[shape.slot(p, x)] =
              shape.slot(g.image_player(p), static_cast<int>(g.act_on_profile_index(x)));
        }
      }
      generators.emplace_back(shape, std::move(map));
    }
  }
  GroupAction group = CloseGroup(shape, generators);
  XEQ_ASSERT(ValidateAction(sym, group).valid, "symmetrized game action breaks utilities");
  XEQ_ASSERT(ClassifyAction(group).player_transitive, "symmetrized action is not transitive");
  return {std::move(sym), std::move(group)};
}

ProductProfile ExtractNashFromSym(const Game& game, const ProductProfile& sym_profile) {
  const Game sym = SymmetrizedUtilities(game, kDefaultMaxProfiles);
  XEQ_REQUIRE(sym_profile.shape() == sym.shape(), "profile does not match the symmetrized game");
  for (int i = 1; i < sym.num_players(); ++i) {
    XEQ_REQUIRE(sym_profile.strategy(i) == sym_profile.strategy(0),
                "profile is not symmetric: player " + std::to_string(i + 1) +
                    " differs from player 1");
  }
  XEQ_REQUIRE(VerifyNash(sym, sym_profile).verdict,
              "profile is not a Nash equilibrium of the symmetrized game");
  const Shape& base = game.shape();
  const RationalVector& rho = sym_profile.strategy(0);
  std::vector<RationalVector> marginals;
  for (int i = 0; i < base.num_players(); ++i) {
    RationalVector marginal(base.num_strategies(i), Rational(0));
    for (std::size_t x = 0; x < rho.size(); ++x) marginal[base.strategy_of(x, i)] += rho[x];
    marginals.push_back(std::move(marginal));
  }
  ProductProfile out(base, std::move(marginals));
  XEQ_ASSERT(VerifyNash(game, out).verdict, "extracted profile is not a Nash equilibrium");
  return out;
}

}  // namespace xeq
