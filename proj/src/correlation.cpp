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

#include "effenv/correlation.hpp"

#include <cmath>
#include <utility>

#include "effenv/quadrature.hpp"

namespace effenv {

namespace {

// A decay value above this is treated as a genuinely negative accumulated
// rate rather than round-off.
constexpr double kDecaySlack = 1e-12;

double checked_decay(double big_gamma_value) {
  const double d = std::exp(-4.0 * big_gamma_value);
  if (d > 1.0 + kDecaySlack)
    throw NonCpRegimeError("decay exceeds 1: accumulated rate is negative");
  return std::min(d, 1.0);
}

}  // namespace

CorrelationKernel CorrelationKernel::exponential(double kappa, double tau_r) {
  if (!(kappa > 0.0)) throw DomainError("kernel: kappa must be positive");
  if (tau_r < 0.0) throw DomainError("kernel: tau_r must be nonnegative");
  CorrelationKernel k;
  k.kind = Kind::exponential;
  k.kappa = kappa;
  k.tau_r = tau_r;
  return k;
}

CorrelationKernel CorrelationKernel::custom(std::function<double(double)> chi_fn,
                                            double quad_tol) {
  if (!chi_fn) throw DomainError("kernel: custom kernel requires a function");
  if (!(quad_tol > 0.0)) throw DomainError("kernel: quad_tol must be positive");
  // Spot-check evenness; full verification is the caller's contract.
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    const double plus = chi_fn(t);
    const double minus = chi_fn(-t);
    if (std::abs(plus - minus) > 1e-9 * std::max(1.0, std::abs(plus)))
      throw DomainError("kernel: custom kernels must be even in tau");
  }
  CorrelationKernel k;
  k.kind = Kind::custom;
  k.custom_fn = std::move(chi_fn);
  k.quad_tol = quad_tol;
  return k;
}

double chi(const CorrelationKernel& k, double tau) {
  if (k.kind == CorrelationKernel::Kind::custom) return k.custom_fn(tau);
  if (k.tau_r == 0.0)
    throw DeltaKernelError("chi: pointwise values undefined for tau_r = 0; "
                           "use gamma/big_gamma instead");
  return k.kappa / (4.0 * k.tau_r) * std::exp(-std::abs(tau) / k.tau_r);
}

double gamma(const CorrelationKernel& k, double tau) {
  if (tau < 0.0) throw DomainError("gamma: tau must be nonnegative");
  if (k.kind == CorrelationKernel::Kind::custom) {
    if (tau == 0.0) return 0.0;
    return integrate_adaptive(k.custom_fn, 0.0, tau, k.quad_tol).value;
  }
  if (k.tau_r == 0.0) return k.kappa / 4.0;
  return k.kappa / 4.0 * (-std::expm1(-tau / k.tau_r));
}

double big_gamma(const CorrelationKernel& k, double tau) {
  if (tau < 0.0) throw DomainError("big_gamma: tau must be nonnegative");
  if (k.kind == CorrelationKernel::Kind::custom) {
    if (tau == 0.0) return 0.0;
    return integrate_adaptive([&k](double t) { return gamma(k, t); }, 0.0, tau,
                              k.quad_tol)
        .value;
  }
  if (k.tau_r == 0.0) return k.kappa * tau / 4.0;
  return k.kappa / 4.0 * (tau + k.tau_r * std::expm1(-tau / k.tau_r));
}

double decay(const CorrelationKernel& k, double tau) {
  return checked_decay(big_gamma(k, tau));
}

double lambda_coupling(const CorrelationKernel& k, double tau) {
  const double bg = big_gamma(k, tau);
  if (!(bg > 0.0))
    throw NonCpRegimeError("lambda_coupling: requires positive accumulated rate");
  // 1 - e^{-8 Gamma} via expm1 keeps the small-Gamma behavior accurate.
  return 2.0 * gamma(k, tau) * std::exp(-4.0 * bg) / std::sqrt(-std::expm1(-8.0 * bg));
}

double capital_lambda(const CorrelationKernel& k, double tau) {
  const double bg = big_gamma(k, tau);
  const double c = checked_decay(bg);
  const double s2 = -std::expm1(-8.0 * bg);
  // atan2(sin 2L, cos 2L) is well conditioned where arccos near 1 is not.
  return 0.5 * std::atan2(std::sqrt(std::max(0.0, s2)), c);
}

DecoherenceProfile DecoherenceProfile::from_kernel(const CorrelationKernel& k) {
  DecoherenceProfile p;
  p.gamma = [k](double tau) { return effenv::gamma(k, tau); };
  p.big_gamma = [k](double tau) { return effenv::big_gamma(k, tau); };
  p.decay = [k](double tau) { return effenv::decay(k, tau); };
  p.capital_lambda = [k](double tau) { return effenv::capital_lambda(k, tau); };
  return p;
}

}  // namespace effenv
