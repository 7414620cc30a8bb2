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

#include "effenv/serialize.hpp"

#include <charconv>
#include <system_error>

#include "effenv/errors.hpp"

namespace effenv {

namespace {

Json mat_to_pairs(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index b = 0; b < m.cols(); ++b)
      rows.push_back(Json::array({m(a, b).real(), m(a, b).imag()}));
  return rows;
}

Mat pairs_to_mat(const Json& j, Eigen::Index d, const char* who) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(d * d))
    throw DomainError(std::string(who) + ": mat must hold dim^2 [re, im] pairs");
  Mat m(d, d);
  std::size_t idx = 0;
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b, ++idx) {
      const Json& entry = j[idx];
      if (!entry.is_array() || entry.size() != 2)
        throw DomainError(std::string(who) + ": each entry must be [re, im]");
      m(a, b) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  return m;
}

std::string channel_kind_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::dephasing: return "dephasing";
    case ChannelKind::depolarizing: return "depolarizing";
    case ChannelKind::amplitude_damping: return "amplitude_damping";
  }
  throw DomainError("channel_kind_name: unknown kind");
}

}  // namespace

Json superop_to_json(const SuperOperator& s) {
  return Json{{"dim", s.dim}, {"mat", mat_to_pairs(s.mat)}};
}

SuperOperator superop_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("mat"))
    throw DomainError("superop: JSON needs \"dim\" and \"mat\"");
  const auto d = j["dim"].get<Eigen::Index>();
  if (d < 1) throw DomainError("superop: dim must be positive");
  return SuperOperator{d, pairs_to_mat(j["mat"], d * d, "superop")};
}

Json kraus_to_json(const KrausSet& k) {
  Json ops = Json::array();
  for (const Mat& op : k.ops)
    ops.push_back(Json{{"dim", op.rows()}, {"mat", mat_to_pairs(op)}});
  return Json{{"ops", ops}, {"residual", k.completeness_residual}};
}

KrausSet kraus_from_json(const Json& j) {
  if (!j.contains("ops") || !j["ops"].is_array() || j["ops"].empty())
    throw DomainError("kraus: JSON needs a nonempty \"ops\" array");
  std::vector<Mat> ops;
  ops.reserve(j["ops"].size());
  for (const Json& jop : j["ops"]) {
    if (!jop.contains("dim") || !jop.contains("mat"))
      throw DomainError("kraus: each op needs \"dim\" and \"mat\"");
    const auto d = jop["dim"].get<Eigen::Index>();
    if (d < 1) throw DomainError("kraus: dim must be positive");
    ops.push_back(pairs_to_mat(jop["mat"], d, "kraus"));
  }
  return KrausSet::from_ops(std::move(ops));
}

Json kernel_to_json(const CorrelationKernel& k) {
  if (k.kind != CorrelationKernel::Kind::exponential)
    throw DomainError("kernel: custom kernels cannot be serialized");
  return Json{{"kind", "exponential"}, {"kappa", k.kappa}, {"tau_r", k.tau_r}};
}

CorrelationKernel kernel_from_json(const Json& j) {
  if (!j.contains("kind")) throw DomainError("kernel: JSON needs \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind != "exponential")
    throw DomainError("kernel: only \"exponential\" kernels can be loaded; "
                      "custom kernels are code-level objects");
  if (!j.contains("kappa") || !j.contains("tau_r"))
    throw DomainError("kernel: JSON needs \"kappa\" and \"tau_r\"");
  CorrelationKernel k = CorrelationKernel::exponential(j["kappa"].get<double>(),
                                                       j["tau_r"].get<double>());
  if (j.contains("quad_tol")) {
    const double tol = j["quad_tol"].get<double>();
    if (!(tol > 0.0)) throw DomainError("kernel: quad_tol must be positive");
    k.quad_tol = tol;
  }
  return k;
}

Json channel_to_json(const ChannelSpec& spec) {
  return Json{{"kind", channel_kind_name(spec.kind)},
              {"r", Json::array({spec.r[0], spec.r[1], spec.r[2]})}};
}

ChannelSpec channel_from_json(const Json& j) {
  if (!j.contains("kind")) throw DomainError("channel: JSON needs \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  ChannelSpec spec;
  if (kind == "dephasing") {
    spec = ChannelSpec::dephasing();
  } else if (kind == "depolarizing") {
    spec = ChannelSpec::depolarizing();
  } else if (kind == "amplitude_damping") {
    spec = ChannelSpec::amplitude_damping();
  } else {
    throw DomainError("channel: unknown kind \"" + kind + "\"");
  }
  if (j.contains("r")) {
    const Json& r = j["r"];
    if (!r.is_array() || r.size() != 3)
      throw DomainError("channel: \"r\" must be [rx, ry, rz]");
    spec.r = Eigen::Vector3d(r[0].get<double>(), r[1].get<double>(),
                             r[2].get<double>());
    spec.validate();
  }
  return spec;
}

Json cp_report_to_json(const CPReport& r) {
  return Json{{"choi_eigenvalues", r.choi_eigenvalues},
              {"min_eigenvalue", r.min_eigenvalue},
              {"hermitian_preserving", r.hermitian_preserving},
              {"is_cp", r.is_cp},
              {"tolerance_used", r.tolerance_used}};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw DomainError("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string decay_curve_csv(const std::vector<double>& tau,
                            const std::vector<double>& decay) {
  if (tau.size() != decay.size()) throw ShapeError("decay_curve_csv: column length mismatch");
  std::string out = "tau,decay\n";
  for (std::size_t i = 0; i < tau.size(); ++i)
    out += format_double(tau[i]) + "," + format_double(decay[i]) + "\n";
  return out;
}

std::string trajectory_csv(const std::vector<double>& tau,
                           const std::vector<BlochVector>& s) {
  if (tau.size() != s.size()) throw ShapeError("trajectory_csv: column length mismatch");
  std::string out = "tau,sx,sy,sz\n";
  for (std::size_t i = 0; i < tau.size(); ++i)
    out += format_double(tau[i]) + "," + format_double(s[i].x) + "," +
           format_double(s[i].y) + "," + format_double(s[i].z) + "\n";
  return out;
}

std::string tcl_trajectory_csv(const Trajectory& t) {
  if (t.tau.size() != t.states.size() || t.tau.size() != t.trace_drifts.size())
    throw ShapeError("tcl_trajectory_csv: column length mismatch");
  std::string out = "tau,sx,sy,sz,trace_drift\n";
  for (std::size_t i = 0; i < t.tau.size(); ++i) {
    const BlochVector s = bloch_from_density(t.states[i]);
    out += format_double(t.tau[i]) + "," + format_double(s.x) + "," +
           format_double(s.y) + "," + format_double(s.z) + "," +
           format_double(t.trace_drifts[i]) + "\n";
  }
  return out;
}

std::string deviation_csv(const std::vector<double>& tau,
                          const std::vector<double>& deviation) {
  if (tau.size() != deviation.size())
    throw ShapeError("deviation_csv: column length mismatch");
  std::string out = "tau,deviation\n";
  for (std::size_t i = 0; i < tau.size(); ++i)
    out += format_double(tau[i]) + "," + format_double(deviation[i]) + "\n";
  return out;
}

}  // namespace effenv
