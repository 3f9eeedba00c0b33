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

#include <algorithm>
#include <utility>

#include "xeq/error.h"

namespace xeq {
namespace {

// Internal standard form: maximize c.z subject to A z = b, b >= 0, z >= 0.
// Original variable x_k is lower_k + z_a, or z_a - z_b when free.
struct StandardForm {
  std::size_t num_struct = 0;
  RationalVector cost;                // over structural columns
  std::vector<RationalVector> rows;   // structural coefficients
  RationalVector rhs;
  std::vector<Sense> senses;
  std::vector<bool> negated;          // row multiplied by -1
  std::size_t user_rows = 0;
  Rational cost_offset;
  // Per original variable: column of the positive part, column of the
  // negative part (or -1), and the shift.
  std::vector<int> pos_col;
  std::vector<int> neg_col;
  RationalVector shift;
};

StandardForm ToStandardForm(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  std::vector<VariableBound> bounds = lp.bounds;
  if (bounds.empty()) bounds.assign(n, VariableBound{});
  XEQ_REQUIRE(bounds.size() == n, "LP bound count differs from variable count");

  StandardForm sf;
  sf.pos_col.assign(n, -1);
  sf.neg_col.assign(n, -1);
  sf.shift.assign(n, Rational(0));
  int col = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sf.pos_col[k] = col++;
    if (bounds[k].lower) {
      sf.shift[k] = *bounds[k].lower;
    } else {
      // Split free; an upper bound becomes an explicit row below.
      sf.neg_col[k] = col++;
    }
  }
  sf.num_struct = static_cast<std::size_t>(col);
  sf.cost.assign(sf.num_struct, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    sf.cost[sf.pos_col[k]] = lp.objective[k];
    if (sf.neg_col[k] >= 0) sf.cost[sf.neg_col[k]] = -lp.objective[k];
    sf.cost_offset += lp.objective[k] * sf.shift[k];
  }

  auto add_row = [&](const RationalVector& coeffs, Sense sense, Rational rhs) {
    RationalVector row(sf.num_struct, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(coeffs[k]) == 0) continue;
      row[sf.pos_col[k]] = coeffs[k];
      if (sf.neg_col[k] >= 0) row[sf.neg_col[k]] = -coeffs[k];
      rhs -= coeffs[k] * sf.shift[k];
    }
    bool flip = sgn(rhs) < 0;
    if (flip) {
      for (Rational& v : row) v = -v;
      rhs = -rhs;
      if (sense == Sense::kLessEqual) {
        sense = Sense::kGreaterEqual;
      } else if (sense == Sense::kGreaterEqual) {
        sense = Sense::kLessEqual;
      }
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(rhs));
    sf.senses.push_back(sense);
    sf.negated.push_back(flip);
  };

  for (const Constraint& c : lp.constraints) {
    XEQ_REQUIRE(c.coefficients.size() == n, "LP constraint width differs from variable count");
    add_row(c.coefficients, c.sense, c.rhs);
  }
  sf.user_rows = lp.constraints.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!bounds[k].upper) continue;
    RationalVector unit(n, Rational(0));
    unit[k] = 1;
    add_row(unit, Sense::kLessEqual, *bounds[k].upper);
  }
  return sf;
}

class Tableau {
 public:
  Tableau(const StandardForm& sf, std::ostream* trace) : trace_(trace) {
    const std::size_t m = sf.rows.size();
    num_struct_ = sf.num_struct;
    // Column layout: structural | slack or surplus per inequality | artificial.
    std::size_t aux = 0;
    for (Sense s : sf.senses) aux += (s == Sense::kEqual) ? 0 : 1;
    std::size_t art = 0;
    for (Sense s : sf.senses) art += (s == Sense::kLessEqual) ? 0 : 1;
    first_art_ = num_struct_ + aux;
    width_ = first_art_ + art;
    rows_.assign(m, RationalVector(width_ + 1, Rational(0)));
    basis_.assign(m, 0);
    identity_col_.assign(m, 0);
    std::size_t next_aux = num_struct_;
    std::size_t next_art = first_art_;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < num_struct_; ++j) rows_[r][j] = sf.rows[r][j];
      rows_[r][width_] = sf.rhs[r];
      switch (sf.senses[r]) {
        case Sense::kLessEqual:
          rows_[r][next_aux] = 1;
          basis_[r] = identity_col_[r] = next_aux++;
          break;
        case Sense::kGreaterEqual:
          rows_[r][next_aux++] = -1;
          rows_[r][next_art] = 1;
          basis_[r] = identity_col_[r] = next_art++;
          break;
        case Sense::kEqual:
          rows_[r][next_art] = 1;
          basis_[r] = identity_col_[r] = next_art++;
          break;
      }
    }
  }

  std::size_t width() const { return width_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t first_artificial() const { return first_art_; }
  bool is_artificial(std::size_t j) const { return j >= first_art_; }
  int pivots() const { return pivots_; }

  // Installs a phase objective (costs over all columns) and rebuilds the
  // reduced-cost row obj[j] = c_B . T[:, j] - c_j.
  void SetObjective(RationalVector cost) {
    cost_ = std::move(cost);
    obj_.assign(width_ + 1, Rational(0));
    for (std::size_t j = 0; j < width_; ++j) obj_[j] = -cost_[j];
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& cb = cost_[basis_[k]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(rows_[k][j]) != 0) obj_[j] += cb * rows_[k][j];
      }
    }
  }

  const Rational& objective_value() const { return obj_[width_]; }

  // Runs Bland's rule to optimality. Returns false if unbounded.
  bool Optimize(bool allow_artificial) {
    while (true) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return true;
      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (sgn(rows_[k][enter]) <= 0) continue;
        Rational ratio = rows_[k][width_] / rows_[k][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[k] < basis_[leave])) {
          leave = k;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      Pivot(leave, enter);
    }
  }

  // After phase one: pivot zero-level artificials out of the basis where a
  // non-artificial column allows it. Rows that stay are redundant.
  void DriveOutArtificials() {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (!is_artificial(basis_[k])) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(rows_[k][j]) != 0) {
          Pivot(k, j);
          break;
        }
      }
    }
  }

  RationalVector Solution() const {
    RationalVector z(width_, Rational(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) z[basis_[k]] = rows_[k][width_];
    return z;
  }

  // y_r = c_B . B^{-1} e_r, read from the column that started as e_r.
  RationalVector Duals() const {
    RationalVector y(rows_.size(), Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t col = identity_col_[r];
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& cb = cost_[basis_[k]];
        if (sgn(cb) != 0 && sgn(rows_[k][col]) != 0) y[r] += cb * rows_[k][col];
      }
    }
    return y;
  }

 private:
  void Pivot(std::size_t leave, std::size_t enter) {
    RationalVector& prow = rows_[leave];
    const Rational inv = 1 / prow[enter];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nonzero.push_back(j);
      }
    }
    auto eliminate = [&](RationalVector& row) {
      if (sgn(row[enter]) == 0) return;
      const Rational factor = row[enter];
      for (std::size_t j : nonzero) row[j] -= factor * prow[j];
    };
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k != leave) eliminate(rows_[k]);
    }
    eliminate(obj_);
    basis_[leave] = enter;
    ++pivots_;
    if (trace_) Dump(leave, enter);
  }

  void Dump(std::size_t leave, std::size_t enter) const {
    *trace_ << "pivot " << pivots_ << ": row " << leave << ", column " << enter << "\n";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      *trace_ << "  [" << basis_[k] << "]";
      for (const Rational& v : rows_[k]) *trace_ << ' ' << v.get_str();
      *trace_ << "\n";
    }
    *trace_ << "  obj";
    for (const Rational& v : obj_) *trace_ << ' ' << v.get_str();
    *trace_ << "\n";
  }

  std::ostream* trace_;
  std::size_t num_struct_ = 0;
  std::size_t first_art_ = 0;
  std::size_t width_ = 0;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_col_;
  RationalVector cost_;
  RationalVector obj_;
  int pivots_ = 0;
};

// Exact optimality certificate in standard form.
void CheckOptimality(const StandardForm& sf, const RationalVector& z, const RationalVector& y) {
  const std::size_t m = sf.rows.size();
  Rational primal_value;
  for (std::size_t j = 0; j < sf.num_struct; ++j) primal_value += sf.cost[j] * z[j];
  Rational dual_value;
  for (std::size_t r = 0; r < m; ++r) dual_value += sf.rhs[r] * y[r];
  XEQ_ASSERT(primal_value == dual_value, "LP strong duality failed");
  for (std::size_t j = 0; j < sf.num_struct; ++j) {
    Rational aty;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(sf.rows[r][j]) != 0) aty += sf.rows[r][j] * y[r];
    }
    XEQ_ASSERT(aty >= sf.cost[j], "LP dual infeasible");
    XEQ_ASSERT(sgn(z[j]) == 0 || aty == sf.cost[j], "LP complementary slackness failed");
  }
  for (std::size_t r = 0; r < m; ++r) {
    Rational activity;
    for (std::size_t j = 0; j < sf.num_struct; ++j) {
      if (sgn(sf.rows[r][j]) != 0) activity += sf.rows[r][j] * z[j];
    }
    switch (sf.senses[r]) {
      case Sense::kLessEqual:
        XEQ_ASSERT(activity <= sf.rhs[r] && sgn(y[r]) >= 0, "LP row sign check failed");
        break;
      case Sense::kGreaterEqual:
        XEQ_ASSERT(activity >= sf.rhs[r] && sgn(y[r]) <= 0, "LP row sign check failed");
        break;
      case Sense::kEqual:
        XEQ_ASSERT(activity == sf.rhs[r], "LP equality violated");
        break;
    }
    XEQ_ASSERT(activity == sf.rhs[r] || sgn(y[r]) == 0, "LP complementary slackness failed");
  }
}

}  // namespace

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpResult SolveLp(const LinearProgram& lp, const LpOptions& options) {
  const StandardForm sf = ToStandardForm(lp);
  Tableau tab(sf, options.trace);
  LpResult result;

  RationalVector phase1(tab.width(), Rational(0));
  for (std::size_t j = tab.first_artificial(); j < tab.width(); ++j) phase1[j] = -1;
  tab.SetObjective(std::move(phase1));
  XEQ_ASSERT(tab.Optimize(true), "phase one cannot be unbounded");
  if (sgn(tab.objective_value()) < 0) {
    result.status = LpStatus::kInfeasible;
    result.pivots = tab.pivots();
    return result;
  }
  tab.DriveOutArtificials();

  RationalVector phase2(tab.width(), Rational(0));
  for (std::size_t j = 0; j < sf.num_struct; ++j) phase2[j] = sf.cost[j];
  tab.SetObjective(std::move(phase2));
  if (!tab.Optimize(false)) {
    result.status = LpStatus::kUnbounded;
    result.pivots = tab.pivots();
    return result;
  }

  const RationalVector z = tab.Solution();
  const RationalVector y = tab.Duals();
  CheckOptimality(sf, z, y);

  result.status = LpStatus::kOptimal;
  result.value = tab.objective_value() + sf.cost_offset;
  result.primal.assign(lp.num_variables(), Rational(0));
  for (std::size_t k = 0; k < lp.num_variables(); ++k) {
    result.primal[k] = sf.shift[k] + z[sf.pos_col[k]];
    if (sf.neg_col[k] >= 0) result.primal[k] -= z[sf.neg_col[k]];
  }
  result.dual.assign(sf.user_rows, Rational(0));
  for (std::size_t r = 0; r < sf.user_rows; ++r) result.dual[r] = sf.negated[r] ? -y[r] : y[r];
  result.pivots = tab.pivots();
  return result;
}

ZeroSumGame::ZeroSumGame(std::size_t r, std::size_t c)
    : rows(r), cols(c), payoff(r * c, Rational(0)) {}

ZeroSumGame::ZeroSumGame(std::size_t r, std::size_t c, RationalVector entries)
    : rows(r), cols(c), payoff(std::move(entries)) {
  XEQ_REQUIRE(payoff.size() == r * c, "matrix entry count differs from rows x cols");
}

Rational ZeroSumGame::Payoff(std::span<const Rational> row_strategy,
                             std::span<const Rational> col_strategy) const {
  return Dot(RowPayoffs(row_strategy), col_strategy);
}

RationalVector ZeroSumGame::RowPayoffs(std::span<const Rational> row_strategy) const {
  XEQ_REQUIRE(row_strategy.size() == rows, "row strategy length");
  RationalVector out(cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (sgn(row_strategy[r]) == 0) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(at(r, c)) != 0) out[c] += row_strategy[r] * at(r, c);
    }
  }
  return out;
}

RationalVector ZeroSumGame::ColPayoffs(std::span<const Rational> col_strategy) const {
  XEQ_REQUIRE(col_strategy.size() == cols, "column strategy length");
  RationalVector out(rows, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(col_strategy[c]) != 0 && sgn(at(r, c)) != 0) out[r] += at(r, c) * col_strategy[c];
    }
  }
  return out;
}

ZeroSumGame ZeroSumGame::NegatedTranspose() const {
  ZeroSumGame out(cols, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.at(c, r) = -at(r, c);
  }
  return out;
}

Game ZeroSumGame::ToGame(std::vector<std::string> row_labels,
                         std::vector<std::string> col_labels) const {
  RationalVector u1(rows * cols), u2(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      // Player 1 (rows) varies fastest.
      u1[r + c * rows] = at(r, c);
      u2[r + c * rows] = -at(r, c);
    }
  }
  std::vector<std::vector<std::string>> labels;
  if (!row_labels.empty() || !col_labels.empty()) {
    labels = {std::move(row_labels), std::move(col_labels)};
  }
  return Game({static_cast<int>(rows), static_cast<int>(cols)}, {std::move(u1), std::move(u2)},
              std::move(labels));
}

MaximinSolution Maximin(const ZeroSumGame& game) {
  XEQ_REQUIRE(game.rows > 0 && game.cols > 0, "empty matrix game");
  // Variables: x_0..x_{R-1} >= 0, then v free.
  const std::size_t R = game.rows;
  LinearProgram lp;
  lp.objective.assign(R + 1, Rational(0));
  lp.objective[R] = 1;
  lp.bounds.assign(R + 1, VariableBound{});
  lp.bounds[R] = VariableBound::Free();
  for (std::size_t c = 0; c < game.cols; ++c) {
    RationalVector row(R + 1, Rational(0));
    for (std::size_t r = 0; r < R; ++r) row[r] = game.at(r, c);
    row[R] = -1;
    lp.AddConstraint(std::move(row), Sense::kGreaterEqual, Rational(0));
  }
  RationalVector simplex(R + 1, Rational(1));
  simplex[R] = 0;
  lp.AddConstraint(std::move(simplex), Sense::kEqual, Rational(1));

  const LpResult res = SolveLp(lp);
  XEQ_ASSERT(res.status == LpStatus::kOptimal, "maximin LP is always solvable");

  MaximinSolution sol;
  sol.value = res.value;
  sol.max_strategy.assign(res.primal.begin(), res.primal.begin() + R);
  sol.min_strategy.resize(game.cols);
  for (std::size_t c = 0; c < game.cols; ++c) sol.min_strategy[c] = -res.dual[c];

  XEQ_ASSERT(IsProbabilityVector(sol.max_strategy), "maximin row strategy is not a distribution");
  XEQ_ASSERT(IsProbabilityVector(sol.min_strategy), "minimax column strategy is not a distribution");
  const RationalVector against_cols = game.RowPayoffs(sol.max_strategy);
  const RationalVector against_rows = game.ColPayoffs(sol.min_strategy);
  XEQ_ASSERT(*std::min_element(against_cols.begin(), against_cols.end()) == sol.value,
             "maximin guarantee differs from the value");
  XEQ_ASSERT(*std::max_element(against_rows.begin(), against_rows.end()) == sol.value,
             "minimax guarantee differs from the value");
  return sol;
}

bool IsGoodReply(const ZeroSumGame& game, std::span<const Rational> sigma,
                 std::span<const Rational> theta, const Rational& value) {
  return game.Payoff(sigma, theta) >= value;
}

bool IsGoodReply(const ZeroSumGame& game, std::span<const Rational> sigma,
                 std::span<const Rational> theta) {
  return IsGoodReply(game, sigma, theta, Maximin(game).value);
}

bool IsGoodSetFinite(const ZeroSumGame& game, std::span<const RationalVector> sigma) {
  XEQ_REQUIRE(!sigma.empty(), "good-set check needs at least one strategy");
  ZeroSumGame restricted(sigma.size(), game.cols);
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    XEQ_REQUIRE(IsProbabilityVector(sigma[k]) && sigma[k].size() == game.rows,
                "good-set member is not a row mixed strategy");
    const RationalVector payoffs = game.RowPayoffs(sigma[k]);
    for (std::size_t c = 0; c < game.cols; ++c) restricted.at(k, c) = payoffs[c];
  }
  return Maximin(restricted).value >= Maximin(game).value;
}

}  // namespace xeq
