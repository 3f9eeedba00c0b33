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

// Exact rational linear programming and matrix games.

#ifndef XEQ_ZEROSUM_LP_H_
#define XEQ_ZEROSUM_LP_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "xeq/game.h"
#include "xeq/rational.h"

namespace xeq {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct VariableBound {
  std::optional<Rational> lower = Rational(0);  // nullopt: unbounded below
  std::optional<Rational> upper;                // nullopt: unbounded above

  static VariableBound Free() { return {std::nullopt, std::nullopt}; }
};

struct Constraint {
  RationalVector coefficients;
  Sense sense = Sense::kLessEqual;
  Rational rhs;
};

// maximize objective . x subject to the constraints and the bounds.
// Bounds default to x >= 0 when `bounds` is empty.
struct LinearProgram {
  RationalVector objective;
  std::vector<Constraint> constraints;
  std::vector<VariableBound> bounds;

  std::size_t num_variables() const { return objective.size(); }
  void AddConstraint(RationalVector coefficients, Sense sense, Rational rhs) {
    constraints.push_back({std::move(coefficients), sense, std::move(rhs)});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

// Duals follow the usual maximization convention: y >= 0 on <= rows,
// y <= 0 on >= rows, free on equalities. Strong duality and complementary
// slackness are checked exactly before returning.
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  RationalVector primal;
  RationalVector dual;  // one per constraint
  int pivots = 0;
};

struct LpOptions {
  std::ostream* trace = nullptr;  // tableau dump after every pivot
};

// Two-phase dense tableau simplex with Bland's rule.
LpResult SolveLp(const LinearProgram& lp, const LpOptions& options = {});

// Two-player zero-sum game; `payoff` is the maximizer's utility, row-major.
struct ZeroSumGame {
  std::size_t rows = 0;
  std::size_t cols = 0;
  RationalVector payoff;

  ZeroSumGame() = default;
  ZeroSumGame(std::size_t r, std::size_t c);
  ZeroSumGame(std::size_t r, std::size_t c, RationalVector entries);

  Rational& at(std::size_t r, std::size_t c) { return payoff[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return payoff[r * cols + c]; }

  // Expected payoff of the maximizer.
  Rational Payoff(std::span<const Rational> row_strategy, std::span<const Rational> col_strategy) const;
  // Payoff of `row_strategy` against every pure column.
  RationalVector RowPayoffs(std::span<const Rational> row_strategy) const;
  // Payoff of every pure row against `col_strategy`.
  RationalVector ColPayoffs(std::span<const Rational> col_strategy) const;

  ZeroSumGame NegatedTranspose() const;
  // Two-player Game with u_2 = -u_1.
  Game ToGame(std::vector<std::string> row_labels = {}, std::vector<std::string> col_labels = {}) const;

  bool operator==(const ZeroSumGame& other) const = default;
};

struct MaximinSolution {
  Rational value;
  RationalVector max_strategy;  // over rows
  RationalVector min_strategy;  // over columns
};

// Exact value and one vertex optimal strategy per side. The pair is checked:
// min_c payoff(max_strategy, c) = value = max_r payoff(r, min_strategy).
MaximinSolution Maximin(const ZeroSumGame& game);

bool IsGoodReply(const ZeroSumGame& game, std::span<const Rational> sigma,
                 std::span<const Rational> theta, const Rational& value);
bool IsGoodReply(const ZeroSumGame& game, std::span<const Rational> sigma,
                 std::span<const Rational> theta);

// A finite set of row strategies is good iff the game restricted to its
// convex hull has the same value.
bool IsGoodSetFinite(const ZeroSumGame& game, std::span<const RationalVector> sigma);

}  // namespace xeq

#endif  // XEQ_ZEROSUM_LP_H_
