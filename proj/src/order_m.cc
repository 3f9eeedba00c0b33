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

#include "xeq/order_m.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <utility>

#include "xeq/auxiliary.h"
#include "xeq/error.h"

namespace xeq {

std::string ToString(OracleMode mode) {
  return mode == OracleMode::kBalanced ? "balanced" : "maximize";
}

struct LiftedReplyOracle::Query {
  OracleMode mode = OracleMode::kBalanced;
  std::vector<double> row_payoff;                         // maximize
  std::vector<std::vector<std::pair<int, double>>> terms;  // balanced
  std::size_t coef_dim = 0;
};

namespace {

// Euclidean projection onto the probability simplex.
void ProjectSimplex(std::vector<double>& v) {
  std::vector<double> sorted(v);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0;
  double theta = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0) theta = candidate;
  }
  for (double& x : v) x = std::max(x - theta, 0.0);
}

struct StartResult {
  double value = 0;
  std::vector<double> point;
  int steps = 0;
};

}  // namespace

LiftedReplyOracle::LiftedReplyOracle(const Game& base, const GroupAction& group, int m,
                                     std::size_t max_profiles)
    : base_(base), m_(m), contracted_(ContractedPower(base, m, max_profiles)) {
  XEQ_REQUIRE(group.shape() == base.shape(), "group acts on a different game");
  RequireValidAction(base, group);
  power_group_ = PowerAction(group, contracted_);

  const Shape& shape = base.shape();
  const int n = shape.num_players();
  // Player orbits by union-find over the player maps.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const GroupElement& g : group.elements()) {
    for (int i = 0; i < n; ++i) parent[find(i)] = find(g.image_player(i));
  }
  std::vector<int> orbit_players(n, 0);
  for (int i = 0; i < n; ++i) ++orbit_players[find(i)];

  const std::vector<std::vector<int>> orbits = SlotOrbits(group);
  orbit_of_slot_.assign(shape.num_slots(), -1);
  std::map<int, int> block_of_root;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (int slot : orbits[o]) orbit_of_slot_[slot] = static_cast<int>(o);
    const int root = find(shape.player_of_slot(orbits[o].front()));
    orbit_size_.push_back(static_cast<double>(orbits[o].size()) / orbit_players[root]);
    const auto [it, inserted] = block_of_root.emplace(root, static_cast<int>(blocks_.size()));
    if (inserted) blocks_.emplace_back();
    blocks_[it->second].push_back(static_cast<int>(o));
  }

  const Shape& cshape = contracted_.game.shape();
  factors_per_profile_ = n * m;
  factors_.reserve(cshape.num_profiles() * factors_per_profile_);
  for (std::size_t s = 0; s < cshape.num_profiles(); ++s) {
    for (int i = 0; i < n; ++i) {
      int code = cshape.strategy_of(s, i);
      for (int j = 0; j < m; ++j) {
        factors_.push_back(shape.slot(i, code % shape.num_strategies(i)));
        code /= shape.num_strategies(i);
      }
    }
  }
}

LiftedReplyOracle::Query LiftedReplyOracle::Prepare(std::span<const Rational> y,
                                                    OracleMode mode) const {
  const Game& cgame = contracted_.game;
  const Shape& cshape = cgame.shape();
  const Shape& shape = base_.shape();
  const DeviationLayout layout(cshape);
  XEQ_REQUIRE(y.size() == layout.size(), "deviation weights do not match the contracted power");
  const std::vector<double> yd = ToDoubles(y);
  const std::size_t profiles = cshape.num_profiles();

  Query q;
  q.mode = mode;
  if (mode == OracleMode::kMaximize) {
    q.row_payoff.assign(profiles, 0.0);
    for (std::size_t s = 0; s < profiles; ++s) {
      double total = 0;
      for (int i = 0; i < cshape.num_players(); ++i) {
        const int r = cshape.strategy_of(s, i);
        const double here = cgame.utility(i, s).get_d();
        for (int t = 0; t < cshape.num_strategies(i); ++t) {
          const double w = yd[layout.column(i, r, t)];
          if (t == r || w == 0) continue;
          total += w * (here - cgame.utility(i, cshape.with_strategy(s, i, t)).get_d());
        }
      }
      q.row_payoff[s] = total;
    }
    return q;
  }

  // Coefficient of base utility u_i(c) sits at i * |C| + c.
  const std::size_t cells = shape.num_profiles();
  q.coef_dim = cells * shape.num_players();
  q.terms.resize(profiles);
  for (std::size_t s = 0; s < profiles; ++s) {
    std::map<int, double> acc;
    const std::vector<std::size_t> here = SplitCopies(shape, m_, s);
    for (int i = 0; i < cshape.num_players(); ++i) {
      const int r = cshape.strategy_of(s, i);
      for (int t = 0; t < cshape.num_strategies(i); ++t) {
        const double w = yd[layout.column(i, r, t)];
        if (t == r || w == 0) continue;
        const std::vector<std::size_t> there =
            SplitCopies(shape, m_, cshape.with_strategy(s, i, t));
        for (int j = 0; j < m_; ++j) {
          acc[static_cast<int>(i * cells + here[j])] += w;
          acc[static_cast<int>(i * cells + there[j])] -= w;
        }
      }
    }
    for (const auto& [index, weight] : acc) {
      if (weight != 0) q.terms[s].emplace_back(index, weight);
    }
  }
  return q;
}

// Objective to minimize: the squared coefficient norm (balanced) or the
// negated payoff (maximize). Fills the gradient in orbit coordinates.
double LiftedReplyOracle::Evaluate(const Query& q, std::span<const double> x,
                                   std::vector<double>* grad) const {
  const Shape& shape = base_.shape();
  std::vector<double> rho(shape.num_slots());
  for (int slot = 0; slot < shape.num_slots(); ++slot) {
    const int o = orbit_of_slot_[slot];
    rho[slot] = x[o] / orbit_size_[o];
  }
  const std::size_t profiles = contracted_.game.num_profiles();
  const int L = factors_per_profile_;
  auto weight = [&](std::size_t s) {
    double w = 1;
    for (int l = 0; l < L; ++l) w *= rho[factors_[s * L + l]];
    return w;
  };

  std::vector<double> coef_of_profile(profiles, 0.0);
  double value = 0;
  if (q.mode == OracleMode::kMaximize) {
    for (std::size_t s = 0; s < profiles; ++s) {
      if (q.row_payoff[s] == 0) continue;
      value -= weight(s) * q.row_payoff[s];
      coef_of_profile[s] = -q.row_payoff[s];
    }
  } else {
    std::vector<double> c(q.coef_dim, 0.0);
    for (std::size_t s = 0; s < profiles; ++s) {
      if (q.terms[s].empty()) continue;
      const double w = weight(s);
      if (w == 0) continue;
      for (const auto& [index, e] : q.terms[s]) c[index] += w * e;
    }
    for (double v : c) value += v * v;
    if (grad) {
      for (std::size_t s = 0; s < profiles; ++s) {
        double h = 0;
        for (const auto& [index, e] : q.terms[s]) h += e * c[index];
        coef_of_profile[s] = 2 * h;
      }
    }
  }
  if (!grad) return value;

  std::vector<double> grad_rho(shape.num_slots(), 0.0);
  std::vector<double> prefix(L + 1), suffix(L + 1);
  for (std::size_t s = 0; s < profiles; ++s) {
    const double coef = coef_of_profile[s];
    if (coef == 0) continue;
    const int* f = &factors_[s * L];
    prefix[0] = 1;
    for (int l = 0; l < L; ++l) prefix[l + 1] = prefix[l] * rho[f[l]];
    suffix[L] = 1;
    for (int l = L - 1; l >= 0; --l) suffix[l] = suffix[l + 1] * rho[f[l]];
    for (int l = 0; l < L; ++l) grad_rho[f[l]] += coef * prefix[l] * suffix[l + 1];
  }
  grad->assign(orbit_size_.size(), 0.0);
  for (int slot = 0; slot < shape.num_slots(); ++slot) {
    const int o = orbit_of_slot_[slot];
    (*grad)[o] += grad_rho[slot] / orbit_size_[o];
  }
  return value;
}

void LiftedReplyOracle::Project(std::vector<double>& x) const {
  for (const std::vector<int>& block : blocks_) {
    std::vector<double> part;
    for (int o : block) part.push_back(x[o]);
    ProjectSimplex(part);
    for (std::size_t k = 0; k < block.size(); ++k) x[block[k]] = part[k];
  }
}

std::vector<double> LiftedReplyOracle::StartPoint(int start, std::uint64_t seed) const {
  std::vector<double> x(orbit_size_.size(), 0.0);
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(start));
  std::gamma_distribution<double> gamma(1.0, 1.0);
  for (const std::vector<int>& block : blocks_) {
    double total = 0;
    for (int o : block) {
      // Start 0 is the uniform profile: mass proportional to orbit size.
      x[o] = start == 0 ? orbit_size_[o] : gamma(rng);
      total += x[o];
    }
    for (int o : block) x[o] /= total;
  }
  return x;
}

OracleReply LiftedReplyOracle::Run(std::span<const Rational> y, OracleMode mode,
                                   const OracleOptions& options) const {
  XEQ_REQUIRE(options.starts >= 1, "the oracle needs at least one start");
  const Query q = Prepare(y, mode);
  std::vector<StartResult> results(options.starts);

  auto descend = [&](int start) {
    std::vector<double> x = StartPoint(start, options.seed);
    std::vector<double> g;
    double f = Evaluate(q, x, &g);
    double eta = 1.0;
    int steps = 0;
    for (; steps < options.max_steps; ++steps) {
      std::vector<double> z(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] - g[k];
      Project(z);
      double stationarity = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        stationarity = std::max(stationarity, std::abs(z[k] - x[k]));
      }
      if (stationarity <= options.stationarity) break;
      bool accepted = false;
      std::vector<double> next(x.size());
      while (eta > 1e-30) {
        for (std::size_t k = 0; k < x.size(); ++k) next[k] = x[k] - eta * g[k];
        Project(next);
        double decrease = 0;
        for (std::size_t k = 0; k < x.size(); ++k) decrease += g[k] * (x[k] - next[k]);
        if (Evaluate(q, next, nullptr) <= f - options.armijo * decrease) {
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;
      x.swap(next);
      f = Evaluate(q, x, &g);
      eta = std::min(eta * 2, 1e8);
    }
    results[start] = StartResult{f, std::move(x), steps};
  };

  const int starts = options.starts;
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (int start = 0; start < starts; ++start) descend(start);

  int best = 0;
  for (int start = 1; start < starts; ++start) {
    if (results[start].value < results[best].value) best = start;
  }
  OracleReply reply;
  reply.mode = mode;
  reply.point = results[best].point;
  reply.start = best;
  reply.steps = results[best].steps;
  reply.value = mode == OracleMode::kBalanced ? std::sqrt(std::max(results[best].value, 0.0))
                                              : -results[best].value;
  reply.profile = ToProfile(reply.point, options.max_denominator);
  return reply;
}

OracleReply LiftedReplyOracle::Balanced(std::span<const Rational> y,
                                        const OracleOptions& options) const {
  return Run(y, OracleMode::kBalanced, options);
}

OracleReply LiftedReplyOracle::Maximize(std::span<const Rational> y,
                                        const OracleOptions& options) const {
  return Run(y, OracleMode::kMaximize, options);
}

OracleReply LiftedReplyOracle::Reply(std::span<const Rational> y,
                                     const OracleOptions& options) const {
  OracleReply balanced = Balanced(y, options);
  if (balanced.value <= kBalancedTolerance) return balanced;
  return Maximize(y, options);
}

double LiftedReplyOracle::Payoff(std::span<const double> point,
                                 std::span<const Rational> y) const {
  XEQ_REQUIRE(point.size() == orbit_size_.size(), "point must give one coordinate per orbit");
  return -Evaluate(Prepare(y, OracleMode::kMaximize), point, nullptr);
}

ProductProfile LiftedReplyOracle::ToProfile(std::span<const double> point,
                                            std::int64_t max_denominator) const {
  XEQ_REQUIRE(point.size() == orbit_size_.size(), "point must give one coordinate per orbit");
  RationalVector exact(point.size());
  for (const std::vector<int>& block : blocks_) {
    Rational total = 0;
    int largest = block.front();
    for (int o : block) {
      exact[o] = point[o] > 0 ? Rationalize(point[o], max_denominator) : Rational(0);
      total += exact[o];
      if (exact[o] > exact[largest]) largest = o;
    }
    exact[largest] += 1 - total;
    if (sgn(exact[largest]) < 0) {
      exact[largest] -= 1 - total;
      for (int o : block) exact[o] /= total;
    }
  }
  const Shape& shape = base_.shape();
  RationalVector slots(shape.num_slots());
  for (int slot = 0; slot < shape.num_slots(); ++slot) {
    const int o = orbit_of_slot_[slot];
    slots[slot] = exact[o] / Rational(static_cast<long>(orbit_size_[o]));
  }
  return ProductProfile::FromSlots(shape, slots);
}

JointDistribution OrderMMixture(const XECertificate& cert, int m, std::size_t max_profiles) {
  XEQ_REQUIRE(!cert.columns.empty(), "certificate has no columns");
  XEQ_REQUIRE(cert.columns.size() == cert.weights.size(), "certificate weight count mismatch");
  const Shape& base = cert.columns.front().shape();
  RationalVector sum;
  for (std::size_t k = 0; k < cert.columns.size(); ++k) {
    XEQ_REQUIRE(cert.columns[k].shape() == base, "certificate columns live on different games");
    const JointDistribution lift = DiagonalLift(cert.columns[k], m, max_profiles);
    if (sum.empty()) sum.assign(lift.size(), Rational(0));
    if (sgn(cert.weights[k]) == 0) continue;
    for (std::size_t s = 0; s < sum.size(); ++s) {
      if (sgn(lift[s]) != 0) sum[s] += cert.weights[k] * lift[s];
    }
  }
  return JointDistribution(PowerShape(base, m, PowerKind::kPower), std::move(sum));
}

std::pair<EquilibriumReport, EquilibriumReport> VerifyOrderMCertificate(
    const Game& game, const GroupAction& group, const XECertificate& cert, int m,
    std::size_t max_profiles) {
  XEQ_REQUIRE(group.shape() == game.shape(), "group acts on a different game");
  EquilibriumReport failed;
  failed.tolerance = cert.epsilon;
  failed.worst_violation = 0;
  failed.verdict = false;
  auto fail = [&](std::string why) {
    failed.failure = std::move(why);
    return std::pair{failed, failed};
  };
  if (sgn(cert.epsilon) < 0) return fail("negative epsilon");
  if (cert.columns.empty()) return fail("certificate has no columns");
  if (cert.columns.size() != cert.weights.size()) return fail("weight count differs from column count");
  if (!IsProbabilityVector(cert.weights)) return fail("weights are not a probability vector");
  for (std::size_t k = 0; k < cert.columns.size(); ++k) {
    if (!(cert.columns[k].shape() == game.shape())) {
      return fail("column " + std::to_string(k) + " does not match the game");
    }
    if (!IsInvariant(group, cert.columns[k])) {
      return fail("column " + std::to_string(k) + " is not invariant under the group");
    }
  }
  const JointDistribution mixture = OrderMMixture(cert, m, max_profiles);
  const PowerGame contracted = ContractedPower(game, m, max_profiles);
  const PowerGame power = Power(game, m, max_profiles);
  const JointDistribution on_contracted(contracted.game.shape(), mixture.probabilities());
  return {VerifyCe(contracted.game, on_contracted, cert.epsilon),
          VerifyCe(power.game, mixture, cert.epsilon)};
}

namespace {

RationalVector LiftedColumn(const Game& contracted, const ProductProfile& rho, int m) {
  RationalVector payoffs = DeviationGains(contracted, LiftProfileToContracted(rho, m));
  for (Rational& v : payoffs) v = -v;
  return payoffs;
}

}  // namespace

OrderMResult SolveOrderMXe(const Game& game, const GroupAction& group, int m,
                           const OrderMOptions& options) {
  XEQ_REQUIRE(m >= 1, "power order m must be at least 1");
  XEQ_REQUIRE(sgn(options.epsilon) >= 0, "epsilon must be nonnegative");
  XEQ_REQUIRE(options.max_iters >= 1, "max_iters must be positive");
  OrderMResult result;
  result.m = m;

  if (m == 1) {
    const SolveXeResult exact = SolveXe(game, group, {options.epsilon, options.max_iters, options.log});
    result.certificate = exact.certificate;
    result.converged = exact.converged;
    result.stalled = exact.stalled;
    result.residual = exact.residual;
    result.iterations = exact.iterations;
    result.master_values = exact.master_values;
  } else {
    const LiftedReplyOracle oracle(game, group, m, options.max_profiles);
    const Game& cgame = oracle.contracted().game;
    std::vector<ProductProfile> columns{AverageOverGroup(group, ProductProfile::Uniform(game.shape()))};
    std::vector<RationalVector> payoff_columns{LiftedColumn(cgame, columns.front(), m)};
    const std::size_t devs = payoff_columns.front().size();
    RationalVector weights;
    while (true) {
      ++result.iterations;
      ZeroSumGame master(columns.size(), devs);
      for (std::size_t k = 0; k < columns.size(); ++k) {
        for (std::size_t d = 0; d < devs; ++d) master.at(k, d) = payoff_columns[k][d];
      }
      const MaximinSolution sol = Maximin(master);
      const Rational value = sol.value;
      XEQ_ASSERT(result.master_values.empty() || value >= result.master_values.back(),
                 "master value decreased");
      result.master_values.push_back(value);
      weights = sol.max_strategy;
      if (options.log) {
        *options.log << "iteration " << result.iterations << ": columns " << columns.size()
                     << ", value " << value.get_str() << " (~" << value.get_d() << ")\n";
      }
      if (value >= -options.epsilon) {
        result.converged = true;
        break;
      }
      if (result.iterations >= options.max_iters) break;

      const RationalVector& y = sol.min_strategy;
      const RationalVector averaged = AverageDeviations(oracle.power_group(), y);
      bool added = false;
      for (OracleMode mode : {OracleMode::kBalanced, OracleMode::kMaximize}) {
        const OracleReply reply = mode == OracleMode::kBalanced
                                      ? oracle.Balanced(averaged, options.oracle)
                                      : oracle.Maximize(averaged, options.oracle);
        if (options.log) {
          *options.log << "  oracle " << ToString(mode) << ": value " << reply.value
                       << ", start " << reply.start << ", steps " << reply.steps << "\n";
        }
        if (mode == OracleMode::kBalanced && reply.value > kBalancedTolerance) continue;
        if (std::find(columns.begin(), columns.end(), reply.profile) != columns.end()) continue;
        RationalVector column = LiftedColumn(cgame, reply.profile, m);
        if (Dot(column, y) <= value) continue;
        columns.push_back(reply.profile);
        payoff_columns.push_back(std::move(column));
        result.oracle_modes.push_back(mode);
        added = true;
        break;
      }
      if (!added) {
        result.stalled = true;
        break;
      }
    }
    const Rational& last = result.master_values.back();
    result.residual = sgn(last) < 0 ? Rational(-last) : Rational(0);
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (sgn(weights[k]) == 0) continue;
      result.certificate.columns.push_back(columns[k]);
      result.certificate.weights.push_back(weights[k]);
    }
  }

  result.certificate.epsilon = result.converged ? options.epsilon : result.residual;
  std::tie(result.contracted_report, result.power_report) =
      VerifyOrderMCertificate(game, group, result.certificate, m, options.max_profiles);
  result.complete =
      result.converged && result.contracted_report.verdict && result.power_report.verdict;
  return result;
}

}  // namespace xeq
