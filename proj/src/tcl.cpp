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

#include "effenv/tcl.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "effenv/errors.hpp"
#include "effenv/hs_space.hpp"

namespace effenv {

namespace {

const Mat& pauli_product(int a, int b) {
  static const std::array<Mat, 9> table = [] {
    std::array<Mat, 9> t;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) t[static_cast<std::size_t>(3 * a + b)] = pauli(a) * pauli(b);
    return t;
  }();
  return table[static_cast<std::size_t>(3 * a + b)];
}

Mat collision_with_rates(const Eigen::Matrix3cd& rates, const Mat& rho) {
  Mat acc = Mat::Zero(2, 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Complex c1 = rates(a, b);
      const Complex c2 = std::conj(rates(b, a));
      if (c1 == Complex(0.0) && c2 == Complex(0.0)) continue;
      const Mat sandwich = pauli(b) * rho * pauli(a);
      const Mat& ab = pauli_product(a, b);
      acc += c1 * (sandwich - ab * rho) + c2 * (sandwich - rho * ab);
    }
  return acc;
}

// Classical fixed-step RK4 on d X / d tau = f(tau, X).
template <typename Deriv, typename Observe>
void rk4_integrate(const Deriv& f, Mat& x, double tau_end, int steps,
                   const Observe& observe) {
  const double h = tau_end / steps;
  observe(0, 0.0, x);
  for (int i = 0; i < steps; ++i) {
    const double t = i * h;
    const Mat k1 = f(t, x);
    const Mat k2 = f(t + 0.5 * h, Mat(x + 0.5 * h * k1));
    const Mat k3 = f(t + 0.5 * h, Mat(x + 0.5 * h * k2));
    const Mat k4 = f(t + h, Mat(x + h * k3));
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    observe(i + 1, (i + 1) * h, x);
  }
}

}  // namespace

Eigen::Matrix3cd GammaMatrix::hermitian_part(double tau) const {
  const Eigen::Matrix3cd g = at(tau);
  return (g + g.adjoint()) / 2.0;
}

Eigen::Matrix3cd GammaMatrix::antihermitian_part(double tau) const {
  const Eigen::Matrix3cd g = at(tau);
  return (g - g.adjoint()) / Complex(0.0, 2.0);
}

GammaMatrix GammaMatrix::for_channel(const ChannelSpec& spec,
                                     const CorrelationKernel& k) {
  spec.validate();
  const Eigen::Matrix3d g = spec.coupling();
  return GammaMatrix{[g, k](double tau) -> Eigen::Matrix3cd {
    return (gamma(k, tau) * g).cast<Complex>();
  }};
}

Mat collision_apply(const GammaMatrix& gm, double tau, const Mat& rho) {
  if (!gm.at) throw DomainError("collision_apply: rate matrix must be callable");
  if (rho.rows() != 2 || rho.cols() != 2)
    throw ShapeError("collision_apply: state must be 2 x 2");
  return collision_with_rates(gm.at(tau), rho);
}

Trajectory integrate_tcl(const GammaMatrix& gm, const Mat& rho0,
                         double tau_end, int steps) {
  if (!gm.at) throw DomainError("integrate_tcl: rate matrix must be callable");
  if (steps < 1) throw DomainError("integrate_tcl: steps must be positive");
  if (!(tau_end > 0.0)) throw DomainError("integrate_tcl: tau_end must be positive");
  if (rho0.rows() != 2 || rho0.cols() != 2)
    throw ShapeError("integrate_tcl: state must be 2 x 2");
  if (!is_density_matrix(rho0, 1e-10))
    throw DomainError("integrate_tcl: initial state must be a density matrix");

  Trajectory traj;
  traj.tau.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  traj.trace_drifts.reserve(static_cast<std::size_t>(steps) + 1);

  Mat rho = rho0;
  rk4_integrate(
      [&gm](double t, const Mat& x) { return collision_with_rates(gm.at(t), x); },
      rho, tau_end, steps, [&traj](int, double t, const Mat& x) {
        traj.tau.push_back(t);
        traj.states.push_back(x);
        const double tdrift = std::abs(x.trace() - Complex(1.0, 0.0));
        traj.trace_drifts.push_back(tdrift);
        traj.trace_drift = std::max(traj.trace_drift, tdrift);
        traj.hermiticity_drift =
            std::max(traj.hermiticity_drift, max_abs(Mat(x - x.adjoint())));
      });
  return traj;
}

SuperOperator tcl_superop(const GammaMatrix& gm, double tau_end, int steps) {
  if (!gm.at) throw DomainError("tcl_superop: rate matrix must be callable");
  if (steps < 1) throw DomainError("tcl_superop: steps must be positive");
  if (!(tau_end > 0.0)) throw DomainError("tcl_superop: tau_end must be positive");

  const auto collision_matrix = [&gm](double t) {
    const Eigen::Matrix3cd rates = gm.at(t);
    return superop_from_map(
               [&rates](const Mat& x) { return collision_with_rates(rates, x); }, 2)
        .mat;
  };

  Mat s = Mat::Identity(4, 4);
  rk4_integrate(
      [&collision_matrix](double t, const Mat& x) { return Mat(collision_matrix(t) * x); },
      s, tau_end, steps, [](int, double, const Mat&) {});
  return SuperOperator{2, s};
}

MatchingReport verify_conditions(const ChannelSpec& spec,
                                 const CorrelationKernel& k, double tau) {
  if (!(tau > 0.0)) throw DomainError("verify_conditions: tau must be positive");
  spec.validate();

  const Eigen::Matrix3d g = spec.coupling();
  const Mat rho_env = spec.env_state();
  std::array<Mat, 3> d_ops;
  for (int a = 0; a < 3; ++a) {
    d_ops[static_cast<std::size_t>(a)] = Mat::Zero(2, 2);
    for (int b = 0; b < 3; ++b)
      if (g(a, b) != 0.0) d_ops[static_cast<std::size_t>(a)] += g(a, b) * pauli(b);
  }

  const double lam = lambda_coupling(k, tau);
  const double cap = capital_lambda(k, tau);
  const double rate = gamma(k, tau);

  MatchingReport report;
  report.tau = tau;
  report.gamma_tau = std::abs(rate) * tau;
  for (int a = 0; a < 3; ++a) {
    report.condition1_residual[a] =
        std::abs(lam * (d_ops[static_cast<std::size_t>(a)] * rho_env).trace());
  }
  report.condition1_max = report.condition1_residual.cwiseAbs().maxCoeff();

  report.expected = (rate * g).cast<Complex>();
  double mismatch = 0.0;
  double off_support = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Complex overlap = (d_ops[static_cast<std::size_t>(a)] *
                               d_ops[static_cast<std::size_t>(b)] * rho_env)
                                  .trace();
      report.lhs(a, b) = lam * cap * overlap;
      if (g(a, b) != 0.0) {
        const double denom = std::abs(report.expected(a, b));
        if (denom > 0.0)
          mismatch = std::max(mismatch,
                              std::abs(report.lhs(a, b) - report.expected(a, b)) / denom);
      } else {
        off_support = std::max(off_support, std::abs(report.lhs(a, b)));
      }
    }
  report.relative_mismatch = mismatch;
  report.off_support_max = off_support;
  return report;
}

Eigen::Matrix3d heisenberg_expansion(const Mat& h_sys, double tau) {
  if (h_sys.rows() != 2 || h_sys.cols() != 2)
    throw ShapeError("heisenberg_expansion: Hamiltonian must be 2 x 2");
  if (!is_hermitian(h_sys, 1e-12))
    throw DomainError("heisenberg_expansion: Hamiltonian must be Hermitian");
  if (std::abs(h_sys.trace()) > 1e-12)
    throw DomainError("heisenberg_expansion: Hamiltonian must be traceless");

  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((h_sys + h_sys.adjoint()) / 2.0));
  const Complex i(0.0, 1.0);
  Vec phases(2);
  for (Eigen::Index n = 0; n < 2; ++n)
    phases[n] = std::exp(i * tau * es.eigenvalues()[n]);
  const Mat u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  Eigen::Matrix3d c;
  for (int a = 0; a < 3; ++a) {
    const Mat rotated = u * pauli(a) * u.adjoint();
    for (int b = 0; b < 3; ++b)
      c(a, b) = 0.5 * hs_inner(pauli(b), rotated).real();
  }
  return c;
}

}  // namespace effenv
