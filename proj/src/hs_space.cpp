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

#include "effenv/hs_space.hpp"

#include <cmath>

#include "effenv/errors.hpp"

namespace effenv {

Complex hs_inner(const Mat& w, const Mat& v) {
  if (w.rows() != w.cols() || v.rows() != v.cols() || w.rows() != v.rows())
    throw ShapeError("hs_inner: operands must be square and equally sized");
  return (w.adjoint() * v).trace();
}

std::vector<Mat> basis(Eigen::Index d) {
  if (d < 1) throw DomainError("basis dimension must be positive");
  std::vector<Mat> units;
  units.reserve(static_cast<std::size_t>(d * d));
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) {
      Mat e = Mat::Zero(d, d);
      e(a, b) = 1.0;
      units.push_back(std::move(e));
    }
  return units;
}

HSVector vectorize(const Mat& x) {
  if (x.rows() != x.cols()) throw ShapeError("vectorize: matrix must be square");
  const Eigen::Index d = x.rows();
  HSVector v{d, Vec(d * d)};
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) v.coords[a * d + b] = x(a, b);
  return v;
}

Mat devectorize(const HSVector& v) {
  const Eigen::Index d = v.dim;
  if (d < 1 || v.coords.size() != d * d)
    throw ShapeError("devectorize: coords length must equal dim^2");
  Mat x(d, d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) x(a, b) = v.coords[a * d + b];
  return x;
}

}  // namespace effenv
