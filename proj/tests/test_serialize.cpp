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

#include <algorithm>
#include <cstdlib>
#include <string>

#include "doctest.h"

#include "effenv/serialize.hpp"
#include "test_support.hpp"

using namespace effenv;

TEST_CASE("superop JSON roundtrip is bitwise exact, including through text") {
  auto& gen = test::rng();
  SuperOperator s{2, test::random_complex_matrix(4, gen)};

  const SuperOperator direct = superop_from_json(superop_to_json(s));
  CHECK(direct.dim == 2);
  CHECK(max_abs_diff(direct.mat, s.mat) == 0.0);

  const Json parsed = Json::parse(superop_to_json(s).dump());
  const SuperOperator via_text = superop_from_json(parsed);
  CHECK(max_abs_diff(via_text.mat, s.mat) == 0.0);

  CHECK_THROWS_AS(superop_from_json(Json{{"dim", 2}}), DomainError);
  CHECK_THROWS_AS(superop_from_json(Json{{"mat", Json::array()}}), DomainError);
  CHECK_THROWS_AS(superop_from_json(Json{{"dim", 0}, {"mat", Json::array()}}),
                  DomainError);
  Json truncated = superop_to_json(s);
  truncated["mat"].erase(truncated["mat"].size() - 1);
  CHECK_THROWS_AS(superop_from_json(truncated), DomainError);
  Json bad_entry = superop_to_json(s);
  bad_entry["mat"][3] = Json::array({1.0});
  CHECK_THROWS_AS(superop_from_json(bad_entry), DomainError);
}

TEST_CASE("kraus JSON roundtrip preserves operators and recomputes the residual") {
  const auto k = CorrelationKernel::exponential(1.0, 1.0);
  const KrausSet kraus =
      extract_kraus(channel_superop(ChannelSpec::amplitude_damping(-1.0), k, 0.8));

  const KrausSet back = kraus_from_json(kraus_to_json(kraus));
  REQUIRE(back.ops.size() == kraus.ops.size());
  for (std::size_t i = 0; i < back.ops.size(); ++i)
    CHECK(max_abs_diff(back.ops[i], kraus.ops[i]) == 0.0);
  CHECK(back.completeness_residual == kraus.completeness_residual);

  CHECK_THROWS_AS(kraus_from_json(Json{{"residual", 0.0}}), DomainError);
  CHECK_THROWS_AS(kraus_from_json(Json{{"ops", Json::array()}}), DomainError);
  Json missing_dim = kraus_to_json(kraus);
  missing_dim["ops"][0].erase("dim");
  CHECK_THROWS_AS(kraus_from_json(missing_dim), DomainError);
}

TEST_CASE("kernel JSON carries kind, kappa, tau_r, and optional quad_tol") {
  const auto k = CorrelationKernel::exponential(2.5, 0.125);
  const Json j = kernel_to_json(k);
  CHECK(j["kind"] == "exponential");
  CHECK(j["kappa"].get<double>() == 2.5);
  CHECK(j["tau_r"].get<double>() == 0.125);

  const CorrelationKernel back = kernel_from_json(j);
  CHECK(back.kind == CorrelationKernel::Kind::exponential);
  CHECK(back.kappa == 2.5);
  CHECK(back.tau_r == 0.125);

  const CorrelationKernel tuned = kernel_from_json(
      Json{{"kind", "exponential"}, {"kappa", 1.0}, {"tau_r", 1.0}, {"quad_tol", 1e-8}});
  CHECK(tuned.quad_tol == 1e-8);

  const auto custom = CorrelationKernel::custom([](double) { return 0.25; });
  CHECK_THROWS_AS(kernel_to_json(custom), DomainError);
  CHECK_THROWS_AS(kernel_from_json(Json{{"kind", "custom"}}), DomainError);
  CHECK_THROWS_AS(kernel_from_json(Json{{"kind", "exponential"}, {"kappa", 1.0}}),
                  DomainError);
  CHECK_THROWS_AS(
      kernel_from_json(Json{
          {"kind", "exponential"}, {"kappa", 1.0}, {"tau_r", 1.0}, {"quad_tol", 0.0}}),
      DomainError);
  CHECK_THROWS_AS(
      kernel_from_json(Json{{"kind", "exponential"}, {"kappa", -1.0}, {"tau_r", 1.0}}),
      DomainError);
}

TEST_CASE("channel JSON: defaults per kind and constraint enforcement") {
  const Json j = channel_to_json(ChannelSpec::amplitude_damping(-0.5));
  CHECK(j["kind"] == "amplitude_damping");
  CHECK(j["r"][2].get<double>() == -0.5);

  const ChannelSpec back = channel_from_json(j);
  CHECK(back.kind == ChannelKind::amplitude_damping);
  CHECK(back.r[2] == -0.5);

  // Missing "r" selects the per-kind default.
  CHECK(channel_from_json(Json{{"kind", "amplitude_damping"}}).r[2] == -1.0);
  CHECK(channel_from_json(Json{{"kind", "dephasing"}}).r.norm() == 0.0);
  CHECK(channel_from_json(Json{{"kind", "depolarizing"}}).r.norm() == 0.0);

  const ChannelSpec tilted = channel_from_json(
      Json{{"kind", "dephasing"}, {"r", Json::array({0.3, -0.4, 0.0})}});
  CHECK(tilted.r[0] == 0.3);

  CHECK_THROWS_AS(channel_from_json(Json{{"kind", "unitary"}}), DomainError);
  CHECK_THROWS_AS(channel_from_json(Json::object()), DomainError);
  CHECK_THROWS_AS(channel_from_json(Json{{"kind", "dephasing"},
                                         {"r", Json::array({0.0, 0.0, 0.5})}}),
                  DomainError);
  CHECK_THROWS_AS(channel_from_json(Json{{"kind", "depolarizing"},
                                         {"r", Json::array({0.1, 0.0, 0.0})}}),
                  DomainError);
  CHECK_THROWS_AS(channel_from_json(Json{{"kind", "amplitude_damping"},
                                         {"r", Json::array({0.0, 0.0})}}),
                  DomainError);
}

TEST_CASE("cp_report_to_json exposes the report fields verbatim") {
  const auto k = CorrelationKernel::exponential(1.0, 1.0);
  const CPReport report = check_cp(channel_superop(ChannelSpec::dephasing(), k, 1.0));
  const Json j = cp_report_to_json(report);
  CHECK(j["is_cp"].get<bool>() == report.is_cp);
  CHECK(j["hermitian_preserving"].get<bool>() == report.hermitian_preserving);
  CHECK(j["min_eigenvalue"].get<double>() == report.min_eigenvalue);
  CHECK(j["tolerance_used"].get<double>() == report.tolerance_used);
  CHECK(j["choi_eigenvalues"].size() == report.choi_eigenvalues.size());
}

TEST_CASE("format_double prints round-trip exact decimal") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(0.0) == "0");

  auto& gen = test::rng();
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (int trial = 0; trial < 50; ++trial) {
    const double v = dist(gen);
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("CSV writers emit one header and newline-terminated rows") {
  const std::string csv = decay_curve_csv({0.0, 0.5}, {1.0, 0.75});
  CHECK(csv == "tau,decay\n0,1\n0.5,0.75\n");
  CHECK_THROWS_AS(decay_curve_csv({0.0}, {1.0, 2.0}), ShapeError);

  const std::string traj = trajectory_csv({0.25}, {BlochVector{1.0, 0.0, -0.5}});
  CHECK(traj == "tau,sx,sy,sz\n0.25,1,0,-0.5\n");
  CHECK_THROWS_AS(trajectory_csv({0.0, 1.0}, {BlochVector{}}), ShapeError);

  const std::string dev = deviation_csv({0.0, 1.0}, {0.0, 0.125});
  CHECK(dev == "tau,deviation\n0,0\n1,0.125\n");
  CHECK_THROWS_AS(deviation_csv({}, {0.0}), ShapeError);

  const auto k = CorrelationKernel::exponential(1.0, 1.0);
  const Trajectory t = integrate_tcl(GammaMatrix::for_channel(ChannelSpec::dephasing(), k),
                                     density_from_bloch(BlochVector{1.0, 0.0, 0.0}),
                                     1.0, 4);
  const std::string tcsv = tcl_trajectory_csv(t);
  CHECK(tcsv.rfind("tau,sx,sy,sz,trace_drift\n0,1,0,0,0\n", 0) == 0);
  CHECK(tcsv.back() == '\n');
  CHECK(std::count(tcsv.begin(), tcsv.end(), '\n') == 6);
}
