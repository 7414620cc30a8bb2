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

#include <span>
#include <vector>

#include "effenv/correlation.hpp"
#include "effenv/effective_env.hpp"
#include "effenv/superop.hpp"

// Grid kernels over time grids. Each kernel ships in an OpenMP flavor and a
// plain serial flavor; grid points are independent and evaluated by the same
// code, so the two produce bit-identical output and the serial variant serves
// as the reference in tests and benchmarks. Exceptions thrown inside a
// parallel region are captured and rethrown on the calling thread.

namespace effenv::sweep {

std::vector<double> linspace(double lo, double hi, int n);

// Log-uniform grid, lo > 0.
std::vector<double> logspace(double lo, double hi, int n);

std::vector<double> decay_curve(const CorrelationKernel& k,
                                std::span<const double> taus);
std::vector<double> decay_curve_serial(const CorrelationKernel& k,
                                       std::span<const double> taus);

enum class TrajectoryPath { dilation, closed_form };

std::vector<BlochVector> bloch_trajectory(const ChannelSpec& spec,
                                          const BlochVector& s0,
                                          const CorrelationKernel& k,
                                          std::span<const double> taus,
                                          TrajectoryPath path);
std::vector<BlochVector> bloch_trajectory_serial(const ChannelSpec& spec,
                                                 const BlochVector& s0,
                                                 const CorrelationKernel& k,
                                                 std::span<const double> taus,
                                                 TrajectoryPath path);

std::vector<CPReport> cp_scan(const ChannelSpec& spec,
                              const CorrelationKernel& k,
                              std::span<const double> taus, double tol = -1.0);
std::vector<CPReport> cp_scan_serial(const ChannelSpec& spec,
                                     const CorrelationKernel& k,
                                     std::span<const double> taus,
                                     double tol = -1.0);

struct DeviationCurve {
  std::vector<double> tau;
  std::vector<double> deviation;  // || s_tcl - s_dilation ||_2 per grid point
};

// Compares the master-equation trajectory against the exact dilation
// dynamics on a uniform grid over [0, tau_max]. The master equation itself
// integrates sequentially (steps_per_unit RK4 steps per unit of 1/kappa,
// at least one per grid interval); the dilation side is a parallel kernel.
DeviationCurve tcl_deviation(const ChannelSpec& spec, const BlochVector& s0,
                             const CorrelationKernel& k, double tau_max,
                             int points, int steps_per_unit = 2048);

}  // namespace effenv::sweep
