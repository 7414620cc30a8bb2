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
#include <vector>

#include <Eigen/Dense>

#include "effenv/correlation.hpp"
#include "effenv/effective_env.hpp"
#include "effenv/matrix.hpp"
#include "effenv/superop.hpp"

namespace effenv {

// Time-dependent rate matrix gamma_ab(tau) of the second-order
// time-convolutionless master equation.
struct GammaMatrix {
  std::function<Eigen::Matrix3cd(double)> at;

  Eigen::Matrix3cd hermitian_part(double tau) const;
  Eigen::Matrix3cd antihermitian_part(double tau) const;

  // gamma(tau) * g for the channel's coupling matrix; real and diagonal for
  // every channel built here.
  static GammaMatrix for_channel(const ChannelSpec& spec,
                                 const CorrelationKernel& k);
};

// Collision operator
//   C(tau) rho = sum_ab { gamma_ab [sigma_b rho, sigma_a]
//                         + conj(gamma_ba) [sigma_b, rho sigma_a] }.
// Traceless for every rho.
Mat collision_apply(const GammaMatrix& gm, double tau, const Mat& rho);

struct Trajectory {
  std::vector<double> tau;
  std::vector<Mat> states;
  std::vector<double> trace_drifts;  // |Tr rho - 1| per grid point
  double trace_drift = 0.0;          // max over the grid
  double hermiticity_drift = 0.0;    // max || rho - rho^dagger ||_max
};

// Fixed-step classical 4th-order integration of d rho / d tau = C(tau) rho
// from a valid density matrix. Trace and hermiticity drift are measured and
// reported, never corrected.
Trajectory integrate_tcl(const GammaMatrix& gm, const Mat& rho0,
                         double tau_end, int steps);

// Evolution superoperator of the master equation at tau_end, obtained by
// integrating the superoperator ODE itself; lets callers run check_cp on the
// induced map.
SuperOperator tcl_superop(const GammaMatrix& gm, double tau_end, int steps);

// Residuals of the two conditions that make the one-qubit effective
// environment reproduce the second-order master equation: with
// D_a = sum_b g_ab sigma_b acting on the environment,
//   (1)  Tr[D_a rho_env] = 0, and
//   (2)  the accumulated interaction matches the rate matrix,
//        lambda(tau) Lambda(tau) Tr[D_a D_b rho_env] ~ gamma(tau) g_ab,
// exact as tau -> 0 and accurate to O(Gamma) at finite tau.
struct MatchingReport {
  double tau = 0.0;
  double gamma_tau = 0.0;               // |gamma(tau)| * tau, the small parameter
  Eigen::Vector3d condition1_residual;  // |lambda(tau) Tr[D_a rho_env]| per axis
  double condition1_max = 0.0;
  Eigen::Matrix3cd lhs;                 // lambda(tau) Lambda(tau) Tr[D_a D_b rho_env]
  Eigen::Matrix3cd expected;            // gamma(tau) g_ab
  double relative_mismatch = 0.0;       // max over entries with g_ab != 0
  double off_support_max = 0.0;         // max |lhs| over entries with g_ab = 0
};

MatchingReport verify_conditions(const ChannelSpec& spec,
                                 const CorrelationKernel& k, double tau);

// Rotation coefficients c_ab(tau) of the interaction-picture expansion
// e^{i H tau} sigma_a e^{-i H tau} = sum_b c_ab(tau) sigma_b for a traceless
// Hermitian system Hamiltonian H.
Eigen::Matrix3d heisenberg_expansion(const Mat& h_sys, double tau);

}  // namespace effenv
