// Copyright 2026 The effenv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "effenv/errors.hpp"
#include "effenv/hs_space.hpp"
#include "effenv/matrix.hpp"

namespace effenv {

// Linear map on the operator space of a d-level system, stored as a
// d^2 x d^2 matrix over the row-major matrix-unit basis:
//   mat[a*d + b, c*d + e] = <<e_ab | S(e_ce)>>.
struct SuperOperator {
  Eigen::Index dim = 0;
  Mat mat;
};

// Ordered Kraus operators together with the completeness defect
// || sum_mu K_mu^dagger K_mu - 1 ||_max measured at construction.
struct KrausSet {
  std::vector<Mat> ops;
  double completeness_residual = 0.0;

  static KrausSet from_ops(std::vector<Mat> ops);
};

// Result of the complete-positivity test. choi_eigenvalues are ascending,
// with entries inside (-tol, tol) snapped to zero; min_eigenvalue is the raw
// smallest eigenvalue before snapping, so is_cp is exactly
// min_eigenvalue >= -tolerance_used together with hermiticity preservation.
struct CPReport {
  std::vector<double> choi_eigenvalues;
  double min_eigenvalue = 0.0;
  bool hermitian_preserving = false;
  bool is_cp = false;
  double tolerance_used = 0.0;
};

class CpViolationError : public std::runtime_error {
 public:
  explicit CpViolationError(CPReport r);

  CPReport report;
};

// Matrix of an arbitrary linear action on d x d operators, built column by
// column from the images of the matrix units.
SuperOperator superop_from_map(const std::function<Mat(const Mat&)>& action,
                               Eigen::Index d);

// Matrix of X -> sum_mu K_mu X K_mu^dagger.
SuperOperator superop_from_kraus(const KrausSet& kraus);

// Partial transposition (the Choi rearrangement): out[ab, cd] = in[ac, bd].
// An exact involution; complete positivity of the map is positivity of this
// matrix.
SuperOperator partial_transpose(const SuperOperator& s);

// Complete-positivity test via the spectrum of the partially transposed
// matrix. tol < 0 selects the default 1e-10 * ||S#||_max.
CPReport check_cp(const SuperOperator& s, double tol = -1.0);

// Canonical Kraus decomposition from the positive eigenpairs of S#: each
// eigenpair (d_nu, v_nu) with d_nu > rank_tol contributes
// sqrt(d_nu) * devectorize(v_nu). Operators are ordered by descending
// eigenvalue with ties broken lexicographically on the vectorized real
// parts, and the phase of each is fixed so its largest-magnitude entry is
// real positive. rank_tol < 0 selects the check_cp default tolerance.
// Throws CpViolationError when the map is not CP.
KrausSet extract_kraus(const SuperOperator& s, double rank_tol = -1.0);

// Equivalent Kraus set K'_mu = sum_nu V[mu, nu] K_nu, after appending
// pad_zeros zero operators to the input; V must be unitary with dimension
// ops.size() + pad_zeros.
KrausSet remix_kraus(const KrausSet& kraus, const Mat& v, int pad_zeros = 0);

// Kraus operators of rho -> Tr_env[U (rho_env tensor rho) U^dagger], where
// the environment carries the slow (most significant) index of U. rho_env is
// diagonalized as sum_m p_m |m><m| and the operators are
// K_nm = sqrt(p_m) <n| U |m> over the same eigenbasis; modes with p_m = 0
// are dropped.
KrausSet kraus_from_dilation(const Mat& u, const Mat& rho_env);

Mat apply_superop(const SuperOperator& s, const Mat& x);

}  // namespace effenv
