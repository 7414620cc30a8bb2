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

#include "effenv/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>

#include "effenv/errors.hpp"
#include "effenv/tcl.hpp"

namespace effenv::sweep {

namespace {

// Runs body(i) over [0, n) in an OpenMP loop; the first exception wins and is
// rethrown on the calling thread after the loop drains.
template <typename Body>
void parallel_index_loop(std::int64_t n, const Body& body) {
  std::exception_ptr first_error = nullptr;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      body(i);
    } catch (...) {
#pragma omp critical(effenv_sweep_error)
      {
        if (!first_error) first_error = std::current_exception();
      }
      failed.store(true, std::memory_order_relaxed);
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

BlochVector trajectory_point(const ChannelSpec& spec, const BlochVector& s0,
                             const CorrelationKernel& k, double tau,
                             TrajectoryPath path) {
  if (path == TrajectoryPath::dilation) return evolve(spec, s0, k, tau);
  return bloch_closed_form(spec, s0, big_gamma(k, tau));
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw DomainError("linspace: need at least two points");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return grid;
}

std::vector<double> logspace(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw DomainError("logspace: bounds must be positive");
  std::vector<double> grid = linspace(std::log(lo), std::log(hi), n);
  for (double& t : grid) t = std::exp(t);
  return grid;
}

std::vector<double> decay_curve(const CorrelationKernel& k,
                                std::span<const double> taus) {
  std::vector<double> out(taus.size());
  parallel_index_loop(static_cast<std::int64_t>(taus.size()), [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] = decay(k, taus[static_cast<std::size_t>(i)]);
  });
  return out;
}

std::vector<double> decay_curve_serial(const CorrelationKernel& k,
                                       std::span<const double> taus) {
  std::vector<double> out(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) out[i] = decay(k, taus[i]);
  return out;
}

std::vector<BlochVector> bloch_trajectory(const ChannelSpec& spec,
                                          const BlochVector& s0,
                                          const CorrelationKernel& k,
                                          std::span<const double> taus,
                                          TrajectoryPath path) {
  std::vector<BlochVector> out(taus.size());
  parallel_index_loop(static_cast<std::int64_t>(taus.size()), [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] =
        trajectory_point(spec, s0, k, taus[static_cast<std::size_t>(i)], path);
  });
  return out;
}

std::vector<BlochVector> bloch_trajectory_serial(const ChannelSpec& spec,
                                                 const BlochVector& s0,
                                                 const CorrelationKernel& k,
                                                 std::span<const double> taus,
                                                 TrajectoryPath path) {
  std::vector<BlochVector> out(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i)
    out[i] = trajectory_point(spec, s0, k, taus[i], path);
  return out;
}

std::vector<CPReport> cp_scan(const ChannelSpec& spec, const CorrelationKernel& k,
                              std::span<const double> taus, double tol) {
  std::vector<CPReport> out(taus.size());
  parallel_index_loop(static_cast<std::int64_t>(taus.size()), [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] =
        check_cp(channel_superop(spec, k, taus[static_cast<std::size_t>(i)]), tol);
  });
  return out;
}

std::vector<CPReport> cp_scan_serial(const ChannelSpec& spec,
                                     const CorrelationKernel& k,
                                     std::span<const double> taus, double tol) {
  std::vector<CPReport> out(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i)
    out[i] = check_cp(channel_superop(spec, k, taus[i]), tol);
  return out;
}

DeviationCurve tcl_deviation(const ChannelSpec& spec, const BlochVector& s0,
                             const CorrelationKernel& k, double tau_max,
                             int points, int steps_per_unit) {
  if (!(tau_max > 0.0)) throw DomainError("tcl_deviation: tau_max must be positive");
  if (points < 2) throw DomainError("tcl_deviation: need at least two points");
  if (steps_per_unit < 1) throw DomainError("tcl_deviation: steps_per_unit must be positive");

  DeviationCurve curve;
  curve.tau = linspace(0.0, tau_max, points);

  const int intervals = points - 1;
  const int substeps = std::max(
      1, static_cast<int>(std::ceil(steps_per_unit * k.kappa * tau_max / intervals)));
  const Trajectory traj = integrate_tcl(GammaMatrix::for_channel(spec, k),
                                        density_from_bloch(s0), tau_max,
                                        substeps * intervals);

  const std::vector<BlochVector> exact =
      bloch_trajectory(spec, s0, k, curve.tau, TrajectoryPath::dilation);

  curve.deviation.resize(curve.tau.size());
  for (std::size_t j = 0; j < curve.tau.size(); ++j) {
    const BlochVector t = bloch_from_density(
        traj.states[j * static_cast<std::size_t>(substeps)]);
    const BlochVector& e = exact[j];
    curve.deviation[j] = std::sqrt((t.x - e.x) * (t.x - e.x) +
                                   (t.y - e.y) * (t.y - e.y) +
                                   (t.z - e.z) * (t.z - e.z));
  }
  return curve;
}

}  // namespace effenv::sweep
