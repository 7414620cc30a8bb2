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

#include "effenv/matrix.hpp"

#include <array>

#include "effenv/errors.hpp"

namespace effenv {

const Mat& pauli(int axis) {
  static const std::array<Mat, 3> sigma = [] {
    std::array<Mat, 3> s;
    const Complex i(0.0, 1.0);
    s[0] = Mat{{0.0, 1.0}, {1.0, 0.0}};
    s[1] = Mat{{0.0, -i}, {i, 0.0}};
    s[2] = Mat{{1.0, 0.0}, {0.0, -1.0}};
    return s;
  }();
  if (axis < 0 || axis > 2) throw DomainError("pauli axis must be 0, 1 or 2");
  return sigma[static_cast<std::size_t>(axis)];
}

Mat identity(Eigen::Index d) {
  if (d < 1) throw DomainError("identity dimension must be positive");
  return Mat::Identity(d, d);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("max_abs_diff: shape mismatch");
  return max_abs(a - b);
}

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(Mat(m - m.adjoint())) <= tol;
}

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(Mat(m.adjoint() * m - Mat::Identity(m.rows(), m.cols()))) <= tol;
}

bool is_density_matrix(const Mat& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) return false;
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((m + m.adjoint()) / 2.0),
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

}  // namespace effenv
