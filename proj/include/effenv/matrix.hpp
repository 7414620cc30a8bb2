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

#include <complex>

#include <Eigen/Dense>

namespace effenv {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Default absolute tolerance for entrywise matrix comparisons.
inline constexpr double kDefaultTol = 1e-12;

// Pauli matrix along axis 0 = x, 1 = y, 2 = z.
const Mat& pauli(int axis);

Mat identity(Eigen::Index d);

// Kronecker product; the first factor carries the slow (most significant)
// part of the composite index.
Mat kron(const Mat& a, const Mat& b);

double max_abs(const Mat& m);
double max_abs_diff(const Mat& a, const Mat& b);

bool is_hermitian(const Mat& m, double tol = kDefaultTol);
bool is_unitary(const Mat& m, double tol = kDefaultTol);

// Hermitian, unit trace and positive semidefinite within tol.
bool is_density_matrix(const Mat& m, double tol = 1e-10);

}  // namespace effenv
