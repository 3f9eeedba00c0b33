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

#include "xeq/equilibria.h"

#include <algorithm>
#include <utility>

#include "xeq/auxiliary.h"
#include "xeq/error.h"
#include "xeq/zerosum_lp.h"

namespace xeq {
namespace {

void Finish(EquilibriumReport& report) {
  report.verdict = !report.failure && report.worst_violation <= report.tolerance;
  if (sgn(report.worst_violation) <= 0) report.witness.reset();
}

// Largest gain over deviation columns; ties go to the first column.
EquilibriumReport ReportFromGains(const Shape& shape, const RationalVector& gains,
                                  const Rational& tolerance) {
  const DeviationLayout layout(shape);
  EquilibriumReport report;
  report.tolerance = tolerance;
  report.worst_violation = 0;
  for (std::size_t c = 0; c < gains.size(); ++c) {
    if (gains[c] > report.worst_violation) {
      report.worst_violation = gains[c];
      const DeviationIndex d = layout.deviation(c);
      report.witness = DeviationWitness{d.player, d.from, d.to};
    }
  }
  Finish(report);
  return report;
}

RationalVector MasterColumn(const Game& game, const ProductProfile& column) {
  RationalVector payoffs = DeviationGains(game, column);
  for (Rational& v : payoffs) v = -v;
  return payoffs;
}

}  // namespace

EquilibriumReport VerifyNash(const Game& game, const ProductProfile& profile,
                             const Rational& tolerance) {
  XEQ_REQUIRE(profile.shape() == game.shape(), "profile does not match the game");
  XEQ_REQUIRE(sgn(tolerance) >= 0, "tolerance must be nonnegative");
  EquilibriumReport report;
  report.tolerance = tolerance;
  report.worst_violation = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    const RationalVector payoffs = PurePayoffs(game, i, profile);
    const Rational current = Dot(payoffs, profile.strategy(i));
    for (int t = 0; t < game.num_strategies(i); ++t) {
      const Rational gain = payoffs[t] - current;
      if (gain > report.worst_violation) {
        report.worst_violation = gain;
        report.witness = DeviationWitness{i, -1, t};
      }
    }
  }
  Finish(report);
  return report;
}

EquilibriumReport VerifyCe(const Game& game, const JointDistribution& dist,
                           const Rational& tolerance) {
  XEQ_REQUIRE(sgn(tolerance) >= 0, "tolerance must be nonnegative");
  return ReportFromGains(game.shape(), DeviationGains(game, dist), tolerance);
}

EquilibriumReport VerifyCeConditional(const Game& game, const JointDistribution& dist,
                                      const Rational& tolerance) {
  XEQ_REQUIRE(dist.shape() == game.shape(), "distribution does not match the game");
  XEQ_REQUIRE(sgn(tolerance) >= 0, "tolerance must be nonnegative");
  const Shape& shape = game.shape();
  EquilibriumReport report;
  report.tolerance = tolerance;
  report.worst_violation = 0;
  for (int i = 0; i < shape.num_players(); ++i) {
    const std::size_t opponents = shape.num_opponent_profiles(i);
    for (int r = 0; r < shape.num_strategies(i); ++r) {
      RationalVector conditional(opponents, Rational(0));
      Rational marginal = 0;
      for (std::size_t o = 0; o < opponents; ++o) {
        conditional[o] = dist[shape.join(o, i, r)];
        marginal += conditional[o];
      }
      if (sgn(marginal) == 0) continue;
      for (Rational& p : conditional) p /= marginal;
      const BestResponseSet best = BestResponses(game, i, conditional);
      if (std::binary_search(best.strategies.begin(), best.strategies.end(), r)) continue;
      Rational recommended = 0;
      for (std::size_t o = 0; o < opponents; ++o) {
        recommended += conditional[o] * game.utility(i, shape.join(o, i, r));
      }
      const Rational violation = marginal * (best.value - recommended);
      if (violation > report.worst_violation) {
        report.worst_violation = violation;
        report.witness = DeviationWitness{i, r, best.strategies.front()};
      }
    }
  }
  Finish(report);
  return report;
}

JointDistribution SolveCe(const Game& game, const std::optional<RationalVector>& objective) {
  const Shape& shape = game.shape();
  const std::size_t profiles = shape.num_profiles();
  LinearProgram lp;
  if (objective) {
    XEQ_REQUIRE(objective->size() == profiles, "objective must weight every profile");
    lp.objective = *objective;
  } else {
    lp.objective.assign(profiles, Rational(0));
  }
  const ZeroSumGame gamma0 = BuildGamma0(game);
  const DeviationLayout layout(shape);
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const DeviationIndex d = layout.deviation(c);
    if (d.from == d.to) continue;
    RationalVector row(profiles);
    for (std::size_t s = 0; s < profiles; ++s) row[s] = gamma0.at(s, c);
    lp.AddConstraint(std::move(row), Sense::kGreaterEqual, Rational(0));
  }
  lp.AddConstraint(RationalVector(profiles, Rational(1)), Sense::kEqual, Rational(1));
  const LpResult res = SolveLp(lp);
  XEQ_ASSERT(res.status == LpStatus::kOptimal, "the correlated equilibrium polytope is never empty");
  JointDistribution ce(shape, res.primal);
  XEQ_ASSERT(VerifyCe(game, ce).verdict, "LP solution fails the equilibrium check");
  return ce;
}

JointDistribution SymmetrizeCe(const Game& game, const GroupAction& group,
                               const JointDistribution& ce) {
  XEQ_REQUIRE(VerifyCe(game, ce).verdict, "input is not a correlated equilibrium");
  XEQ_REQUIRE(group.shape() == game.shape(), "group acts on a different game");
  JointDistribution out = AverageOverGroup(group, ce);
  XEQ_ASSERT(IsInvariant(group, out), "group average is not invariant");
  XEQ_ASSERT(VerifyCe(game, out).verdict, "group average is not a correlated equilibrium");
  return out;
}

JointDistribution Mixture(const XECertificate& cert) {
  XEQ_REQUIRE(!cert.columns.empty(), "certificate has no columns");
  XEQ_REQUIRE(cert.columns.size() == cert.weights.size(), "certificate weight count mismatch");
  const Shape& shape = cert.columns.front().shape();
  RationalVector sum(shape.num_profiles(), Rational(0));
  for (std::size_t k = 0; k < cert.columns.size(); ++k) {
    if (sgn(cert.weights[k]) == 0) continue;
    XEQ_REQUIRE(cert.columns[k].shape() == shape, "certificate columns live on different games");
    const JointDistribution joint = ProductToJoint(cert.columns[k]);
    for (std::size_t s = 0; s < sum.size(); ++s) {
      if (sgn(joint[s]) != 0) sum[s] += cert.weights[k] * joint[s];
    }
  }
  return JointDistribution(shape, std::move(sum));
}

SolveXeResult SolveXe(const Game& game, const GroupAction& group, const SolveXeOptions& options) {
  XEQ_REQUIRE(sgn(options.epsilon) >= 0, "epsilon must be nonnegative");
  XEQ_REQUIRE(options.max_iters >= 1, "max_iters must be positive");
  XEQ_REQUIRE(group.shape() == game.shape(), "group acts on a different game");
  const DeviationLayout layout(game.shape());
  const std::size_t devs = layout.size();

  std::vector<ProductProfile> columns{AverageOverGroup(group, ProductProfile::Uniform(game.shape()))};
  std::vector<RationalVector> payoff_columns{MasterColumn(game, columns.front())};

  SolveXeResult result;
  RationalVector weights;
  while (true) {
    ++result.iterations;
    // The master is the matrix game restricted to the current columns.
    const std::size_t K = columns.size();
    ZeroSumGame master(K, devs);
    for (std::size_t k = 0; k < K; ++k) {
      for (std::size_t d = 0; d < devs; ++d) master.at(k, d) = payoff_columns[k][d];
    }
    const MaximinSolution res = Maximin(master);

    const Rational value = res.value;
    XEQ_ASSERT(result.master_values.empty() || value >= result.master_values.back(),
               "master value decreased");
    result.master_values.push_back(value);
    weights = res.max_strategy;
    if (options.log) {
      *options.log << "iteration " << result.iterations << ": columns " << K << ", value "
                   << value.get_str() << "\n";
    }
    if (value >= -options.epsilon) {
      result.converged = true;
      break;
    }
    if (result.iterations >= options.max_iters) break;

    const RationalVector& y = res.min_strategy;
    ProductProfile reply = SymmetricGoodReply(game, group, y);
    // Payoff zero against y while every existing column scores <= value < 0.
    if (std::find(columns.begin(), columns.end(), reply) != columns.end()) {
      result.stalled = true;
      break;
    }
    payoff_columns.push_back(MasterColumn(game, reply));
    XEQ_ASSERT(sgn(Dot(payoff_columns.back(), y)) == 0, "new column must have payoff zero");
    columns.push_back(std::move(reply));
  }

  const Rational& last = result.master_values.back();
  result.residual = sgn(last) < 0 ? Rational(-last) : Rational(0);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (sgn(weights[k]) == 0) continue;
    result.certificate.columns.push_back(columns[k]);
    result.certificate.weights.push_back(weights[k]);
  }
  result.certificate.epsilon = result.converged ? options.epsilon : result.residual;
  return result;
}

EquilibriumReport VerifyXeCertificate(const Game& game, const GroupAction& group,
                                      const XECertificate& cert) {
  XEQ_REQUIRE(group.shape() == game.shape(), "group acts on a different game");
  EquilibriumReport report;
  report.tolerance = cert.epsilon;
  report.worst_violation = 0;
  auto fail = [&](std::string why) {
    report.failure = std::move(why);
    Finish(report);
    return report;
  };
  if (sgn(cert.epsilon) < 0) return fail("negative epsilon");
  if (cert.columns.empty()) return fail("certificate has no columns");
  if (cert.columns.size() != cert.weights.size()) return fail("weight count differs from column count");
  if (!IsProbabilityVector(cert.weights)) return fail("weights are not a probability vector");
  for (std::size_t k = 0; k < cert.columns.size(); ++k) {
    if (!(cert.columns[k].shape() == game.shape())) {
      return fail("column " + std::to_string(k) + " does not match the game");
    }
    for (std::size_t e = 0; e < group.order(); ++e) {
      if (!(ActOnProfile(group.element(e), cert.columns[k]) == cert.columns[k])) {
        return fail("column " + std::to_string(k) + " is not invariant under group element " +
                    std::to_string(e));
      }
    }
  }
  return VerifyCe(game, Mixture(cert), cert.epsilon);
}

}  // namespace xeq
