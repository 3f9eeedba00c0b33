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

#include <Eigen/Dense>
#include <cmath>

#include "xeq/equilibria.h"
#include "xeq/error.h"

namespace xeq {

std::string ToString(DnnVerdict verdict) {
  switch (verdict) {
    case DnnVerdict::kMember:
      return "member";
    case DnnVerdict::kNonmember:
      return "nonmember";
    case DnnVerdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

bool IsPositiveSemidefinite(std::size_t n, std::span<const Rational> matrix) {
  XEQ_REQUIRE(matrix.size() == n * n, "matrix must be square");
  std::vector<RationalVector> a(n, RationalVector(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = matrix[r * n + c];
  }
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Pivot on the largest remaining diagonal entry.
    std::size_t p = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (!done[k] && (p == n || a[k][k] > a[p][p])) p = k;
    }
    if (sgn(a[p][p]) < 0) return false;
    if (sgn(a[p][p]) == 0) {
      // Zero diagonal everywhere left: PSD iff the remaining block is zero.
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!done[r] && !done[c] && sgn(a[r][c]) != 0) return false;
        }
      }
      return true;
    }
    done[p] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || sgn(a[r][p]) == 0) continue;
      const Rational factor = a[r][p] / a[p][p];
      for (std::size_t c = 0; c < n; ++c) {
        if (!done[c]) a[r][c] -= factor * a[p][c];
      }
    }
  }
  return true;
}

DnnResult DnnMembership(std::size_t n, std::span<const Rational> matrix, double tol) {
  XEQ_REQUIRE(n > 0 && matrix.size() == n * n, "matrix must be square and nonempty");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      XEQ_REQUIRE(matrix[r * n + c] == matrix[c * n + r], "matrix must be symmetric");
    }
  }
  DnnResult out;
  out.dimension = n;
  out.nonnegative = true;
  for (const Rational& v : matrix) {
    if (sgn(v) < 0) out.nonnegative = false;
  }
  out.positive_semidefinite = IsPositiveSemidefinite(n, matrix);

  Eigen::MatrixXd dense(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) dense(r, c) = matrix[r * n + c].get_d();
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  out.near_singular = std::abs(out.min_eigenvalue) <= tol;

  if (!out.nonnegative || !out.positive_semidefinite) {
    out.verdict = DnnVerdict::kNonmember;
  } else {
    out.verdict = n <= 4 ? DnnVerdict::kMember : DnnVerdict::kInconclusive;
  }
  return out;
}

}  // namespace xeq
