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

#include "effenv/effective_env.hpp"

#include <cmath>
#include <numbers>

#include "effenv/errors.hpp"

namespace effenv {

namespace {

constexpr double kBlochSlack = 1e-12;

void require_bloch_norm(const Eigen::Vector3d& r, const char* who) {
  if (r.norm() > 1.0 + kBlochSlack)
    throw DomainError(std::string(who) + ": Bloch vector must have norm <= 1");
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

Mat density_from_bloch(const BlochVector& s) {
  require_bloch_norm(Eigen::Vector3d(s.x, s.y, s.z), "density_from_bloch");
  Mat rho = 0.5 * identity(2);
  rho += 0.5 * (s.x * pauli(0) + s.y * pauli(1) + s.z * pauli(2));
  return rho;
}

BlochVector bloch_from_density(const Mat& rho) {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw ShapeError("bloch_from_density: state must be 2 x 2");
  BlochVector s;
  s.x = (pauli(0) * rho).trace().real();
  s.y = (pauli(1) * rho).trace().real();
  s.z = (pauli(2) * rho).trace().real();
  return s;
}

Eigen::Matrix3d coupling_matrix(ChannelKind kind) {
  Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
  switch (kind) {
    case ChannelKind::dephasing:
      g(2, 2) = 1.0;
      break;
    case ChannelKind::depolarizing:
      g = Eigen::Matrix3d::Identity();
      break;
    case ChannelKind::amplitude_damping:
      g(0, 0) = 1.0;
      g(1, 1) = 1.0;
      break;
  }
  return g;
}

ChannelSpec ChannelSpec::dephasing(double rx, double ry) {
  ChannelSpec spec{ChannelKind::dephasing, Eigen::Vector3d(rx, ry, 0.0)};
  spec.validate();
  return spec;
}

ChannelSpec ChannelSpec::depolarizing() {
  return ChannelSpec{ChannelKind::depolarizing, Eigen::Vector3d::Zero()};
}

ChannelSpec ChannelSpec::amplitude_damping(double rz) {
  ChannelSpec spec{ChannelKind::amplitude_damping, Eigen::Vector3d(0.0, 0.0, rz)};
  spec.validate();
  return spec;
}

Mat ChannelSpec::env_state() const {
  validate();
  Mat rho = 0.5 * identity(2);
  for (int a = 0; a < 3; ++a) rho += 0.5 * r[a] * pauli(a);
  return rho;
}

void ChannelSpec::validate() const {
  require_bloch_norm(r, "ChannelSpec");
  constexpr double tol = 1e-12;
  switch (kind) {
    case ChannelKind::dephasing:
      if (std::abs(r[2]) > tol)
        throw DomainError("ChannelSpec: dephasing requires r_z = 0");
      break;
    case ChannelKind::depolarizing:
      if (r.cwiseAbs().maxCoeff() > tol)
        throw DomainError("ChannelSpec: depolarizing requires the maximally mixed "
                          "environment, r = 0");
      break;
    case ChannelKind::amplitude_damping:
      if (std::abs(r[0]) > tol || std::abs(r[1]) > tol)
        throw DomainError("ChannelSpec: amplitude damping requires r = (0, 0, r_z)");
      break;
  }
}

DilationUnitary build_unitary(const ChannelSpec& spec, double capital_lambda) {
  constexpr double quarter_pi = std::numbers::pi / 4.0;
  if (capital_lambda < -1e-12 || capital_lambda > quarter_pi + 1e-12)
    throw DomainError("build_unitary: accumulated coupling must lie in [0, pi/4]");
  spec.validate();

  const Eigen::Matrix3d g = spec.coupling();
  Mat generator = Mat::Zero(4, 4);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (g(a, b) == 0.0) continue;
      // System carries the fast index, environment the slow one.
      generator += g(a, b) * kron(pauli(b), pauli(a));
    }

  Eigen::SelfAdjointEigenSolver<Mat> es(generator);
  const Complex i(0.0, 1.0);
  Vec phases(4);
  for (Eigen::Index n = 0; n < 4; ++n)
    phases[n] = std::exp(-i * capital_lambda * es.eigenvalues()[n]);
  return DilationUnitary{es.eigenvectors() * phases.asDiagonal() *
                         es.eigenvectors().adjoint()};
}

Mat partial_trace_env(const Mat& rho_total, Eigen::Index env_dim) {
  if (rho_total.rows() != rho_total.cols())
    throw ShapeError("partial_trace_env: state must be square");
  if (env_dim < 1 || rho_total.rows() % env_dim != 0)
    throw ShapeError("partial_trace_env: environment dimension does not divide the state");
  const Eigen::Index d = rho_total.rows() / env_dim;
  Mat out = Mat::Zero(d, d);
  for (Eigen::Index e = 0; e < env_dim; ++e)
    out += rho_total.block(e * d, e * d, d, d);
  return out;
}

BlochVector evolve(const ChannelSpec& spec, const BlochVector& s,
                   const CorrelationKernel& k, double tau) {
  if (tau < 0.0) throw DomainError("evolve: tau must be nonnegative");
  const Mat u = build_unitary(spec, capital_lambda(k, tau)).mat;
  const Mat joint = kron(spec.env_state(), density_from_bloch(s));
  return bloch_from_density(partial_trace_env(Mat(u * joint * u.adjoint()), 2));
}

BlochVector bloch_closed_form(const ChannelSpec& spec, const BlochVector& s,
                              double big_gamma) {
  if (big_gamma < 0.0)
    throw DomainError("bloch_closed_form: accumulated rate must be nonnegative");
  const double e4 = std::exp(-4.0 * big_gamma);
  const double e8 = e4 * e4;
  switch (spec.kind) {
    case ChannelKind::dephasing:
      return BlochVector{s.x * e4, s.y * e4, s.z};
    case ChannelKind::depolarizing:
      return BlochVector{s.x * e8, s.y * e8, s.z * e8};
    case ChannelKind::amplitude_damping: {
      // s_z e^{-8G} + r_z (1 - e^{-8G}), arranged so Gamma = 0 is exactly the
      // identity.
      const double rz = spec.r[2];
      return BlochVector{s.x * e4, s.y * e4,
                         s.z * e8 - rz * std::expm1(-8.0 * big_gamma)};
    }
  }
  throw DomainError("bloch_closed_form: unknown channel kind");
}

SuperOperator channel_superop(const ChannelSpec& spec,
                              const CorrelationKernel& k, double tau) {
  if (tau < 0.0) throw DomainError("channel_superop: tau must be nonnegative");
  const Mat u = build_unitary(spec, capital_lambda(k, tau)).mat;
  return superop_from_kraus(kraus_from_dilation(u, spec.env_state()));
}

}  // namespace effenv
