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

#include "effenv/errors.hpp"

namespace effenv {

// Environment correlation kernel chi(tau).
//
// The exponential kind is chi(tau) = kappa / (4 tau_r) * exp(-|tau| / tau_r)
// with decoherence rate kappa and reservoir memory time tau_r; tau_r = 0 is
// the memoryless (Markovian) limit, where chi degenerates to a delta function
// and only the integrated quantities below remain meaningful. Custom kernels
// supply chi directly and must be real and even in tau; their integrated
// quantities are computed by adaptive quadrature to quad_tol.
struct CorrelationKernel {
  enum class Kind { exponential, custom };

  Kind kind = Kind::exponential;
  double kappa = 1.0;
  double tau_r = 0.0;
  std::function<double(double)> custom_fn;
  double quad_tol = 1e-10;

  static CorrelationKernel exponential(double kappa, double tau_r);
  static CorrelationKernel custom(std::function<double(double)> chi_fn,
                                  double quad_tol = 1e-10);

  bool markovian() const { return kind == Kind::exponential && tau_r == 0.0; }
};

// chi(tau). Throws DeltaKernelError for the memoryless exponential kernel.
double chi(const CorrelationKernel& k, double tau);

// Decoherence rate gamma(tau), the integral of chi over [0, tau]. For the
// exponential kernel this is kappa/4 * (1 - exp(-tau/tau_r)), saturating at
// kappa/4; the memoryless limit is the constant kappa/4.
double gamma(const CorrelationKernel& k, double tau);

// Accumulated rate Gamma(tau), the integral of gamma over [0, tau].
double big_gamma(const CorrelationKernel& k, double tau);

// Coherence decay function exp(-4 Gamma(tau)), clamped to at most 1. Values
// exceeding 1 beyond round-off mean a negative accumulated rate and raise
// NonCpRegimeError.
double decay(const CorrelationKernel& k, double tau);

// Effective environment coupling
//   lambda(tau) = 2 gamma(tau) e^{-4 Gamma} / sqrt(1 - e^{-8 Gamma}).
// Integrable but divergent like tau^{-1/2} as tau -> 0 in the memoryless
// limit; finite at tau -> 0 when tau_r > 0. Throws NonCpRegimeError when
// Gamma(tau) <= 0.
double lambda_coupling(const CorrelationKernel& k, double tau);

// Accumulated coupling Lambda(tau), the integral of lambda over [0, tau],
// evaluated in closed form as arccos(e^{-4 Gamma}) / 2. Always in [0, pi/4].
double capital_lambda(const CorrelationKernel& k, double tau);

// The derived rate functions of one kernel, bundled as callables.
struct DecoherenceProfile {
  std::function<double(double)> gamma;
  std::function<double(double)> big_gamma;
  std::function<double(double)> decay;
  std::function<double(double)> capital_lambda;

  static DecoherenceProfile from_kernel(const CorrelationKernel& k);
};

}  // namespace effenv
