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

#include <vector>

#include "effenv/matrix.hpp"

namespace effenv {

// Coordinates of a d x d operator in the matrix-unit basis e_ab = |a><b|,
// stored row-major: coords[a * dim + b] = <<e_ab | X>>. This index order is
// fixed project-wide; every superoperator matrix refers to it.
struct HSVector {
  Eigen::Index dim = 0;
  Vec coords;
};

// Hilbert-Schmidt inner product Tr(w^dagger v).
Complex hs_inner(const Mat& w, const Mat& v);

// The d^2 matrix units e_ab in row-major (a, b) order.
std::vector<Mat> basis(Eigen::Index d);

HSVector vectorize(const Mat& x);
Mat devectorize(const HSVector& v);

}  // namespace effenv
