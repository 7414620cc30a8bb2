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

#include <Eigen/Dense>

#include "effenv/correlation.hpp"
#include "effenv/matrix.hpp"
#include "effenv/superop.hpp"

namespace effenv {

enum class ChannelKind { dephasing, depolarizing, amplitude_damping };

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

// rho = (1 + s . sigma) / 2; requires |s| <= 1.
Mat density_from_bloch(const BlochVector& s);
BlochVector bloch_from_density(const Mat& rho);

// Coupling matrix g_ab selecting which sigma_a tensor sigma_b terms enter
// the system-environment interaction: dephasing couples z-z only,
// depolarizing couples isotropically, amplitude damping exchanges x and y.
Eigen::Matrix3d coupling_matrix(ChannelKind kind);

// Channel descriptor. The kind fixes the coupling matrix; r is the initial
// Bloch vector of the one-qubit effective environment, constrained per kind:
// dephasing allows any r in the equator plane (r_z = 0, and the reduced
// dynamics do not depend on r_x, r_y), depolarizing requires the maximally
// mixed r = 0, amplitude damping allows r = (0, 0, r_z) with the pure ground
// state r_z = -1 as default.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::dephasing;
  Eigen::Vector3d r = Eigen::Vector3d::Zero();

  static ChannelSpec dephasing(double rx = 0.0, double ry = 0.0);
  static ChannelSpec depolarizing();
  static ChannelSpec amplitude_damping(double rz = -1.0);

  Eigen::Matrix3d coupling() const { return coupling_matrix(kind); }
  Mat env_state() const;
  void validate() const;
};

// 4 x 4 interaction unitary exp(-i Lambda sum_ab g_ab sigma_a tensor
// sigma_b) acting on environment (slow index) and system (fast index),
// built by eigendecomposition of the Hermitian generator.
struct DilationUnitary {
  Mat mat;
};

DilationUnitary build_unitary(const ChannelSpec& spec, double capital_lambda);

// Reduced state after tracing out the slow-index factor of dimension env_dim.
Mat partial_trace_env(const Mat& rho_total, Eigen::Index env_dim);

// Exact reduced dynamics at time tau: embed the system state with the
// channel's environment state, conjugate by the dilation unitary at
// Lambda(tau), trace out the environment.
BlochVector evolve(const ChannelSpec& spec, const BlochVector& s,
                   const CorrelationKernel& k, double tau);

// Closed-form Bloch dynamics at accumulated rate Gamma:
//   dephasing          (s_x e^{-4G}, s_y e^{-4G}, s_z)
//   depolarizing       s e^{-8G}
//   amplitude damping  (s_x e^{-4G}, s_y e^{-4G}, r_z + (s_z - r_z) e^{-8G})
BlochVector bloch_closed_form(const ChannelSpec& spec, const BlochVector& s,
                              double big_gamma);

// The channel at time tau as a superoperator (Kraus form of the dilation).
SuperOperator channel_superop(const ChannelSpec& spec,
                              const CorrelationKernel& k, double tau);

}  // namespace effenv
