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

#include <cstddef>
#include <functional>

#include "effenv/errors.hpp"

namespace effenv {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

// Globally adaptive Gauss-Kronrod (7, 15) integration of f over [a, b] to an
// absolute tolerance: the panel with the largest error estimate is split
// until the summed estimate drops below abs_tol. Throws IntegrationError,
// carrying the estimate actually achieved, once max_panels panels exist and
// the target is still missed. All nodes are interior, so integrable endpoint
// singularities are sampled but the endpoints themselves are never evaluated.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    std::size_t max_panels = std::size_t{1} << 20);

}  // namespace effenv
