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

// Order-m exchangeable equilibria by column generation on the deviation
// game of the contracted power.
//
// Columns are m-fold i.i.d. lifts of invariant base profiles rho, so the
// payoff of a column against a deviation mix y is a polynomial in rho. The
// reply oracle works in floating point:
//
//   balanced  drive every coefficient of the payoff, viewed as a linear form
//             in the base utilities, to zero. A zero of this residual scores
//             exactly 0 against y in every game with the same symmetry, which
//             mirrors the exact good reply of the order-one case. Its
//             coordinates can be irrational.
//   maximize  plain ascent on the payoff itself, used when no balanced
//             point is found.
//
// Replies are rounded to rationals and admitted only if their exact payoff
// beats the master value. The final mixture is verified exactly against
// both powers.

#ifndef XEQ_ORDER_M_H_
#define XEQ_ORDER_M_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "xeq/equilibria.h"
#include "xeq/game.h"
#include "xeq/game_algebra.h"
#include "xeq/group_action.h"
#include "xeq/rational.h"

namespace xeq {

enum class OracleMode { kBalanced, kMaximize };
std::string ToString(OracleMode mode);

struct OracleOptions {
  int starts = 16;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int max_steps = 5000;
  double stationarity = 1e-10;
  double armijo = 1e-4;
  std::int64_t max_denominator = 1000000;
  bool parallel = true;
};

// Balanced replies with sqrt(residual) above this are rejected.
inline constexpr double kBalancedTolerance = 1e-8;

struct OracleReply {
  OracleMode mode = OracleMode::kBalanced;
  ProductProfile profile;     // rationalized, exactly invariant
  std::vector<double> point;  // orbit coordinates before rounding
  double value = 0;           // residual (balanced) or payoff (maximize)
  int start = 0;              // winning start
  int steps = 0;
};

class LiftedReplyOracle {
 public:
  LiftedReplyOracle(const Game& base, const GroupAction& group, int m,
                    std::size_t max_profiles = kDefaultMaxProfiles);

  const Game& base() const { return base_; }
  int m() const { return m_; }
  const PowerGame& contracted() const { return contracted_; }
  const GroupAction& power_group() const { return power_group_; }
  std::size_t num_orbits() const { return orbit_size_.size(); }

  // `y` is a distribution over the deviations of the contracted power.
  OracleReply Balanced(std::span<const Rational> y, const OracleOptions& options = {}) const;
  OracleReply Maximize(std::span<const Rational> y, const OracleOptions& options = {}) const;
  // Balanced when its residual is small enough, else Maximize.
  OracleReply Reply(std::span<const Rational> y, const OracleOptions& options = {}) const;

  // Floating-point payoff of the lift of the profile given in orbit
  // coordinates.
  double Payoff(std::span<const double> point, std::span<const Rational> y) const;
  // Invariant profile from orbit coordinates (rationalized).
  ProductProfile ToProfile(std::span<const double> point, std::int64_t max_denominator) const;

 private:
  struct Query;
  Query Prepare(std::span<const Rational> y, OracleMode mode) const;
  double Evaluate(const Query& q, std::span<const double> x, std::vector<double>* grad) const;
  void Project(std::vector<double>& x) const;
  std::vector<double> StartPoint(int start, std::uint64_t seed) const;
  OracleReply Run(std::span<const Rational> y, OracleMode mode, const OracleOptions& options) const;

  Game base_;
  int m_;
  PowerGame contracted_;
  GroupAction power_group_;
  std::vector<int> orbit_of_slot_;
  std::vector<double> orbit_size_;           // strategies of one player in the orbit
  std::vector<std::vector<int>> blocks_;     // orbits grouped by player orbit
  std::vector<int> factors_;                 // per contracted profile, m*n base slots
  int factors_per_profile_ = 0;
};

struct OrderMOptions {
  Rational epsilon = Fraction(1, 1000000000);
  int max_iters = 500;
  OracleOptions oracle;
  std::size_t max_profiles = kDefaultMaxProfiles;
  std::ostream* log = nullptr;
};

struct OrderMResult {
  int m = 1;
  // Columns are invariant base profiles; the represented distribution is
  // the weighted mixture of their m-fold lifts.
  XECertificate certificate;
  bool complete = false;   // converged and both checks pass
  bool converged = false;
  bool stalled = false;
  Rational residual;
  int iterations = 0;
  RationalVector master_values;
  std::vector<OracleMode> oracle_modes;  // per added column
  EquilibriumReport contracted_report;
  EquilibriumReport power_report;
};

// Mixture of the m-fold lifts, on the power profile space.
JointDistribution OrderMMixture(const XECertificate& cert, int m,
                                std::size_t max_profiles = kDefaultMaxProfiles);

// Checks weights and column invariance, then the mixture against the
// contracted power and the power, each within cert.epsilon.
std::pair<EquilibriumReport, EquilibriumReport> VerifyOrderMCertificate(
    const Game& game, const GroupAction& group, const XECertificate& cert, int m,
    std::size_t max_profiles = kDefaultMaxProfiles);

// m = 1 runs the exact solver with the same epsilon and iteration budget.
OrderMResult SolveOrderMXe(const Game& game, const GroupAction& group, int m,
                           const OrderMOptions& options = {});

}  // namespace xeq

#endif  // XEQ_ORDER_M_H_
