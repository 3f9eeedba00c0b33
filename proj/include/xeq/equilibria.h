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

#ifndef XEQ_EQUILIBRIA_H_
#define XEQ_EQUILIBRIA_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "xeq/game.h"
#include "xeq/group_action.h"
#include "xeq/rational.h"

namespace xeq {

// A profitable deviation. `from` is -1 for Nash checks, where the deviation
// is unconditional.
struct DeviationWitness {
  int player = 0;
  int from = -1;
  int to = 0;

  bool operator==(const DeviationWitness&) const = default;
};

// verdict <=> worst_violation <= tolerance. worst_violation is the largest
// deviation gain and is never negative. `failure` describes a structural
// problem (bad certificate) that makes the verdict false on its own.
struct EquilibriumReport {
  bool verdict = true;
  Rational worst_violation;
  Rational tolerance;
  std::optional<DeviationWitness> witness;
  std::optional<std::string> failure;

  bool operator==(const EquilibriumReport&) const = default;
};

EquilibriumReport VerifyNash(const Game& game, const ProductProfile& profile,
                             const Rational& tolerance = 0);
EquilibriumReport VerifyCe(const Game& game, const JointDistribution& dist,
                           const Rational& tolerance = 0);
// Same verdict through conditional best responses given each recommendation.
EquilibriumReport VerifyCeConditional(const Game& game, const JointDistribution& dist,
                                      const Rational& tolerance = 0);

// A correlated equilibrium; with `objective` (weights over profiles) one
// that maximizes objective . pi over the polytope.
JointDistribution SolveCe(const Game& game, const std::optional<RationalVector>& objective = {});

// Group average of a correlated equilibrium; throws InputError if `ce` is
// not one.
JointDistribution SymmetrizeCe(const Game& game, const GroupAction& group,
                               const JointDistribution& ce);

// Convex combination of invariant product profiles.
struct XECertificate {
  std::vector<ProductProfile> columns;
  RationalVector weights;
  Rational epsilon;

  bool operator==(const XECertificate&) const = default;
};

JointDistribution Mixture(const XECertificate& cert);

struct SolveXeOptions {
  Rational epsilon = 0;
  int max_iters = 500;
  std::ostream* log = nullptr;
};

struct SolveXeResult {
  XECertificate certificate;
  bool converged = false;
  bool stalled = false;  // the reply was already a column
  Rational residual;     // max(0, -master value)
  int iterations = 0;
  RationalVector master_values;
};

// Column generation over invariant product profiles.
SolveXeResult SolveXe(const Game& game, const GroupAction& group, const SolveXeOptions& options = {});

// Checks weights, column invariance, then the mixture within cert.epsilon.
EquilibriumReport VerifyXeCertificate(const Game& game, const GroupAction& group,
                                      const XECertificate& cert);

enum class DnnVerdict { kMember, kNonmember, kInconclusive };
std::string ToString(DnnVerdict verdict);

struct DnnResult {
  DnnVerdict verdict = DnnVerdict::kNonmember;
  bool nonnegative = false;
  bool positive_semidefinite = false;  // decided exactly
  double min_eigenvalue = 0;           // floating-point diagnostic
  bool near_singular = false;          // |min_eigenvalue| <= tol
  std::size_t dimension = 0;
};

inline constexpr double kDnnTolerance = 1e-9;

// Doubly nonnegative test of a symmetric rational matrix (row-major). Up to
// dimension 4 this decides complete positivity; above it a pass is reported
// inconclusive.
DnnResult DnnMembership(std::size_t dimension, std::span<const Rational> matrix,
                        double tol = kDnnTolerance);

// Exact PSD test by symmetric pivoted LDL^T.
bool IsPositiveSemidefinite(std::size_t dimension, std::span<const Rational> matrix);

}  // namespace xeq

#endif  // XEQ_EQUILIBRIA_H_
