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

#include "effenv/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace effenv {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule. Nodes are the
// nonnegative half; odd indices are the embedded Gauss nodes, index 7 is the
// center.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(mid);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[static_cast<std::size_t>(i)];
    const double sum = f(mid - dx) + f(mid + dx);
    kronrod += kKronrodWeights[static_cast<std::size_t>(i)] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[static_cast<std::size_t>((i - 1) / 2)] * sum;
  }
  return Panel{a, b, kronrod * half, std::abs(kronrod - gauss) * half};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    std::size_t max_panels) {
  if (!f) throw DomainError("integrate_adaptive: integrand must be callable");
  if (!(abs_tol > 0.0)) throw DomainError("integrate_adaptive: tolerance must be positive");
  if (a == b) return QuadratureResult{0.0, 0.0, 0};

  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  // Panels too narrow to split keep contributing to the totals but leave the
  // queue for good.
  const double min_width =
      4.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(a), std::abs(b), 1.0});

  std::priority_queue<Panel> queue;
  queue.push(evaluate_panel(f, a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  std::size_t panels = 1;
  double stuck_error = 0.0;

  while (total_error > abs_tol && !queue.empty()) {
    if (panels >= max_panels)
      throw IntegrationError("integrate_adaptive: panel budget exhausted", total_error);

    const Panel worst = queue.top();
    queue.pop();
    if (worst.b - worst.a <= min_width) {
      // Splitting further cannot help; once the unsplittable panels alone
      // carry more error than the tolerance, no amount of work elsewhere can
      // succeed.
      stuck_error += worst.error;
      if (stuck_error > abs_tol)
        throw IntegrationError(
            "integrate_adaptive: interval exhausted below resolvable width",
            total_error);
      continue;
    }

    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    ++panels;
    queue.push(left);
    queue.push(right);
  }

  if (total_error > abs_tol)
    throw IntegrationError("integrate_adaptive: interval exhausted below resolvable width",
                           total_error);

  return QuadratureResult{sign * total_value, total_error, panels};
}

}  // namespace effenv
