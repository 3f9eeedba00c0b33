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

#include "xeq/zerosum_lp.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.h"
#include "xeq/error.h"

namespace xeq {
namespace {

using testing::Gen;

TEST(SolveLp, TextbookWithDuals) {
  LinearProgram lp;
  lp.objective = {3, 5};
  lp.AddConstraint({1, 0}, Sense::kLessEqual, 4);
  lp.AddConstraint({0, 2}, Sense::kLessEqual, 12);
  lp.AddConstraint({3, 2}, Sense::kLessEqual, 18);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Rational(36));
  EXPECT_EQ(r.primal, (RationalVector{2, 6}));
  EXPECT_EQ(r.dual, (RationalVector{0, Fraction(3, 2), 1}));
}

TEST(SolveLp, InfeasibleAndUnbounded) {
  LinearProgram infeasible;
  infeasible.objective = {1};
  infeasible.AddConstraint({1}, Sense::kLessEqual, -1);
  EXPECT_EQ(SolveLp(infeasible).status, LpStatus::kInfeasible);

  LinearProgram unbounded;
  unbounded.objective = {1, 0};
  unbounded.AddConstraint({1, -1}, Sense::kLessEqual, 1);
  EXPECT_EQ(SolveLp(unbounded).status, LpStatus::kUnbounded);
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST(SolveLp, BealeTerminates) {
  LinearProgram lp;
  lp.objective = {Fraction(3, 4), -150, Fraction(1, 50), -6};
  lp.AddConstraint({Fraction(1, 4), -60, Fraction(-1, 25), 9}, Sense::kLessEqual, 0);
  lp.AddConstraint({Fraction(1, 2), -90, Fraction(-1, 50), 3}, Sense::kLessEqual, 0);
  lp.AddConstraint({0, 0, 1, 0}, Sense::kLessEqual, 1);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Fraction(1, 20));
}

TEST(SolveLp, FreeVariablesAndBounds) {
  LinearProgram lp;
  lp.objective = {1, 0};
  lp.AddConstraint({1, 1}, Sense::kEqual, 1);
  lp.bounds = {VariableBound{}, VariableBound{Rational(-2), std::nullopt}};
  EXPECT_EQ(SolveLp(lp).value, Rational(3));

  lp.bounds = {VariableBound{std::nullopt, Rational(2)}, VariableBound::Free()};
  const LpResult r = SolveLp(lp);
  EXPECT_EQ(r.value, Rational(2));
  EXPECT_EQ(r.primal, (RationalVector{2, -1}));

  LinearProgram ge;
  ge.objective = {-1, -1};
  ge.AddConstraint({1, 2}, Sense::kGreaterEqual, 4);
  ge.AddConstraint({3, 1}, Sense::kGreaterEqual, 6);
  const LpResult g = SolveLp(ge);
  EXPECT_EQ(g.value, Fraction(-14, 5));
  EXPECT_EQ(g.primal, (RationalVector{Fraction(8, 5), Fraction(6, 5)}));
  for (const Rational& y : g.dual) EXPECT_LE(y, 0);
}

// Independent certificate check: primal feasible, dual feasible, equal
// objective values.
TEST(SolveLp, PropertyDualCertificate) {
  Gen gen(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = gen.Int(1, 4);
    const int m = gen.Int(1, 4);
    LinearProgram lp;
    for (int j = 0; j < n; ++j) lp.objective.push_back(gen.Ratio(5, 3));
    for (int k = 0; k < m; ++k) {
      RationalVector row;
      for (int j = 0; j < n; ++j) row.push_back(gen.Ratio(4, 2));
      const int kind = gen.Int(0, 2);
      lp.AddConstraint(row, kind == 0 ? Sense::kLessEqual : kind == 1 ? Sense::kGreaterEqual : Sense::kEqual,
                       gen.Ratio(6, 2));
    }
    RationalVector box(n, 1);
    lp.AddConstraint(box, Sense::kLessEqual, 10);  // keeps it bounded
    const LpResult r = SolveLp(lp);
    if (r.status != LpStatus::kOptimal) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible);
      continue;
    }
    EXPECT_EQ(Dot(lp.objective, r.primal), r.value);
    Rational dual_value;
    RationalVector reduced = lp.objective;
    for (std::size_t k = 0; k < lp.constraints.size(); ++k) {
      const Constraint& c = lp.constraints[k];
      const Rational lhs = Dot(c.coefficients, r.primal);
      if (c.sense == Sense::kLessEqual) {
        EXPECT_LE(lhs, c.rhs);
        EXPECT_GE(r.dual[k], 0);
      } else if (c.sense == Sense::kGreaterEqual) {
        EXPECT_GE(lhs, c.rhs);
        EXPECT_LE(r.dual[k], 0);
      } else {
        EXPECT_EQ(lhs, c.rhs);
      }
      dual_value += r.dual[k] * c.rhs;
      for (int j = 0; j < n; ++j) reduced[j] -= r.dual[k] * c.coefficients[j];
    }
    for (int j = 0; j < n; ++j) {
      EXPECT_GE(r.primal[j], 0);
      EXPECT_LE(reduced[j], 0);  // y^T A >= c on nonnegative variables
    }
    EXPECT_EQ(dual_value, r.value);
  }
}

TEST(Maximin, PenniesAndResponseMatrix) {
  const ZeroSumGame mp(2, 2, {1, -1, -1, 1});
  const MaximinSolution s = Maximin(mp);
  EXPECT_EQ(s.value, Rational(0));
  EXPECT_EQ(s.max_strategy, (RationalVector{Fraction(1, 2), Fraction(1, 2)}));
  EXPECT_EQ(s.min_strategy, (RationalVector{Fraction(1, 2), Fraction(1, 2)}));

  const MaximinSolution g = Maximin(ZeroSumGame(2, 2, {1, -1, 0, 0}));
  EXPECT_EQ(g.value, Rational(0));
  EXPECT_EQ(g.max_strategy, (RationalVector{0, 1}));
}

// Closed form for 2x2 games without a saddle point.
TEST(Maximin, PropertyTwoByTwoClosedForm) {
  Gen gen(32);
  int checked = 0;
  while (checked < 200) {
    const Rational a = gen.Ratio(6, 3), b = gen.Ratio(6, 3), c = gen.Ratio(6, 3), d = gen.Ratio(6, 3);
    const Rational lower = std::max(std::min(a, b), std::min(c, d));
    const Rational upper = std::min(std::max(a, c), std::max(b, d));
    if (lower == upper) continue;  // saddle point
    ++checked;
    const MaximinSolution s = Maximin(ZeroSumGame(2, 2, {a, b, c, d}));
    EXPECT_EQ(s.value, (a * d - b * c) / (a + d - b - c));
    EXPECT_EQ(s.max_strategy[0], (d - c) / (a + d - b - c));
  }
}

TEST(Maximin, PropertyGuarantees) {
  Gen gen(33);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = gen.Int(1, 5), cols = gen.Int(1, 5);
    ZeroSumGame g(rows, cols);
    for (Rational& v : g.payoff) v = gen.Ratio(5, 4);
    const MaximinSolution s = Maximin(g);
    EXPECT_TRUE(IsProbabilityVector(s.max_strategy));
    EXPECT_TRUE(IsProbabilityVector(s.min_strategy));
    for (const Rational& v : g.RowPayoffs(s.max_strategy)) EXPECT_GE(v, s.value);
    for (const Rational& v : g.ColPayoffs(s.min_strategy)) EXPECT_LE(v, s.value);
    // Negated transpose swaps the roles.
    EXPECT_EQ(Maximin(g.NegatedTranspose()).value, -s.value);
  }
}

TEST(GoodReply, Pennies) {
  const ZeroSumGame mp(2, 2, {1, -1, -1, 1});
  const RationalVector half = {Fraction(1, 2), Fraction(1, 2)};
  Gen gen(34);
  for (int trial = 0; trial < 20; ++trial) EXPECT_TRUE(IsGoodReply(mp, half, gen.Simplex(2)));
  EXPECT_FALSE(IsGoodReply(mp, RationalVector{1, 0}, RationalVector{0, 1}));
  EXPECT_FALSE(IsGoodSetFinite(mp, std::vector<RationalVector>{{1, 0}}));
  EXPECT_TRUE(IsGoodSetFinite(mp, std::vector<RationalVector>{{1, 0}, {0, 1}}));
}

TEST(ZeroSumGame, ToGameIsZeroSum) {
  const Game g = ZeroSumGame(2, 3, {1, 2, 3, 4, 5, 6}).ToGame();
  EXPECT_TRUE(IsZeroSum(g));
  EXPECT_EQ(g.utility(0, g.shape().profile_index(std::vector<int>{1, 2})), Rational(6));
}

}  // namespace
}  // namespace xeq
