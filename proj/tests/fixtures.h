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

// Fixture games, groups and hand-rolled random generators shared by tests.

#ifndef XEQ_TESTS_FIXTURES_H_
#define XEQ_TESTS_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "xeq/game.h"
#include "xeq/group_action.h"
#include "xeq/rational.h"

namespace xeq::testing {

// Row-major bimatrix with player 1 on rows.
inline Game Bimatrix(const std::vector<std::vector<Rational>>& a,
                     const std::vector<std::vector<Rational>>& b,
                     std::vector<std::vector<std::string>> labels = {}) {
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  RationalVector u1, u2;
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      u1.push_back(a[r][c]);
      u2.push_back(b[r][c]);
    }
  }
  return Game({rows, cols}, {u1, u2}, std::move(labels));
}

inline std::vector<std::vector<Rational>> Transpose(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::vector<Rational>> t(m[0].size(), std::vector<Rational>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[0].size(); ++c) t[c][r] = m[r][c];
  }
  return t;
}

inline Game Chicken() {
  const std::vector<std::vector<Rational>> a = {{4, 1}, {5, 0}};
  return Bimatrix(a, Transpose(a), {{"swerve", "dare"}, {"swerve", "dare"}});
}

inline Game MatchingPennies() {
  return Bimatrix({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}, {{"H", "T"}, {"H", "T"}});
}

inline Game Asymmetric() {
  return Bimatrix({{0, 2}, {2, 1}}, {{3, 0}, {0, 1}}, {{"top", "bottom"}, {"left", "right"}});
}

// Strategies a, b, c; a and b are payoff equivalent for each player.
inline Game Erratum() {
  const std::vector<std::vector<Rational>> a = {{1, 1, 1}, {1, 1, 1}, {0, 0, 2}};
  return Bimatrix(a, Transpose(a), {{"a", "b", "c"}, {"a", "b", "c"}});
}

// Symmetric 2x2 game with payoffs (r,r) (s,0) / (0,s) (0,0).
inline Game IrrationalReplyGame(const Rational& r, const Rational& s) {
  const std::vector<std::vector<Rational>> a = {{r, s}, {0, 0}};
  return Bimatrix(a, Transpose(a));
}

// n players, strategies Z_n, u_i = 1 iff s_i = s_{i-1} + 1 (mod n).
inline Game Cyclic(int n) {
  const Shape shape(std::vector<int>(n, n));
  std::vector<RationalVector> u(n, RationalVector(shape.num_profiles()));
  for (std::size_t p = 0; p < shape.num_profiles(); ++p) {
    for (int i = 0; i < n; ++i) {
      const int prev = shape.strategy_of(p, (i + n - 1) % n);
      if (shape.strategy_of(p, i) == (prev + 1) % n) u[i][p] = 1;
    }
  }
  return Game(std::vector<int>(n, n), std::move(u));
}

// Slot map from (player, strategy) -> (player, strategy).
template <typename F>
GroupElement MakeElement(const Shape& shape, F&& image) {
  std::vector<int> map(shape.num_slots());
  for (int i = 0; i < shape.num_players(); ++i) {
    for (int s = 0; s < shape.num_strategies(i); ++s) {
      const auto [j, t] = image(i, s);
      map[shape.slot(i, s)] = shape.slot(j, t);
    }
  }
  return GroupElement(shape, std::move(map));
}

// Players swap, strategies kept (square two-player games).
inline GroupElement PlayerSwap(const Shape& shape) {
  return MakeElement(shape, [](int i, int s) { return std::pair{1 - i, s}; });
}

// Matching pennies h = (H1 H2 T1 T2).
inline GroupElement PenniesH(const Shape& shape) {
  return MakeElement(shape, [](int i, int s) {
    return i == 0 ? std::pair{1, s} : std::pair{0, 1 - s};
  });
}

// Matching pennies g = (H1 T1)(H2 T2).
inline GroupElement PenniesG(const Shape& shape) {
  return MakeElement(shape, [](int i, int s) { return std::pair{i, 1 - s}; });
}

inline GroupElement CyclicIncrement(const Shape& shape) {
  const int n = shape.num_players();
  return MakeElement(shape, [n](int i, int s) { return std::pair{i, (s + 1) % n}; });
}

inline GroupElement CyclicRotation(const Shape& shape) {
  const int n = shape.num_players();
  return MakeElement(shape, [n](int i, int s) { return std::pair{(i + 1) % n, s}; });
}

inline GroupAction Generated(const Shape& shape, std::vector<GroupElement> gens) {
  return CloseGroup(shape, gens);
}

struct Fixture {
  std::string name;
  Game game;
  GroupAction group;
};

// The order-one fixtures with a nontrivial symmetry group each.
inline std::vector<Fixture> SymmetricFixtures() {
  std::vector<Fixture> out;
  const Game chicken = Chicken();
  out.push_back({"chicken", chicken, Generated(chicken.shape(), {PlayerSwap(chicken.shape())})});
  const Game mp = MatchingPennies();
  out.push_back({"pennies_h", mp, Generated(mp.shape(), {PenniesH(mp.shape())})});
  out.push_back({"pennies_g", mp, Generated(mp.shape(), {PenniesG(mp.shape())})});
  const Game asym = Asymmetric();
  out.push_back({"asymmetric", asym, TrivialGroup(asym.shape())});
  const Game err = Erratum();
  out.push_back({"erratum", err, Generated(err.shape(), {PlayerSwap(err.shape())})});
  const Game base = IrrationalReplyGame(1, 2);
  out.push_back({"irrational_reply", base, Generated(base.shape(), {PlayerSwap(base.shape())})});
  const Game cyc = Cyclic(3);
  out.push_back({"cyclic3", cyc,
                 Generated(cyc.shape(), {CyclicIncrement(cyc.shape()), CyclicRotation(cyc.shape())})});
  return out;
}

// Hand-rolled generators. All draws go through one engine so a seed fixes a
// whole test.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational Ratio(int max_abs_num, int max_den) {
    return Fraction(Int(-max_abs_num, max_abs_num), Int(1, max_den));
  }

  // Strictly positive integer weights, normalized; zero_chance in percent
  // zeroes entries (at least one entry survives).
  RationalVector Simplex(std::size_t n, int max_weight = 20, int zero_chance = 0) {
    std::vector<long> w(n);
    long total = 0;
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = Int(1, 100) <= zero_chance ? 0 : Int(1, max_weight);
      total += w[k];
    }
    if (total == 0) {
      w[static_cast<std::size_t>(Int(0, static_cast<int>(n) - 1))] = 1;
      total = 1;
    }
    RationalVector out;
    for (long v : w) out.push_back(Fraction(v, total));
    return out;
  }

  Game RandomGame(const std::vector<int>& counts, int max_abs = 5, int max_den = 3) {
    const Shape shape(counts);
    std::vector<RationalVector> u(counts.size(), RationalVector(shape.num_profiles()));
    for (auto& ui : u) {
      for (auto& v : ui) v = Ratio(max_abs, max_den);
    }
    return Game(counts, std::move(u));
  }

  ProductProfile RandomProfile(const Shape& shape, int zero_chance = 0) {
    std::vector<RationalVector> parts;
    for (int i = 0; i < shape.num_players(); ++i) {
      parts.push_back(Simplex(static_cast<std::size_t>(shape.num_strategies(i)), 20, zero_chance));
    }
    return ProductProfile(shape, std::move(parts));
  }

  JointDistribution RandomJoint(const Shape& shape, int zero_chance = 0) {
    return JointDistribution(shape, Simplex(shape.num_profiles(), 20, zero_chance));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace xeq::testing

#endif  // XEQ_TESTS_FIXTURES_H_
