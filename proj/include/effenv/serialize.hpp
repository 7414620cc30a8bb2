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

#include <string>
#include <vector>

#include "json.hpp"

#include "effenv/correlation.hpp"
#include "effenv/effective_env.hpp"
#include "effenv/superop.hpp"
#include "effenv/tcl.hpp"

namespace effenv {

using Json = nlohmann::json;

// {"dim": d, "mat": [[re, im], ...]} with mat flattened row-major.
Json superop_to_json(const SuperOperator& s);
SuperOperator superop_from_json(const Json& j);

// {"ops": [<superop-style matrix>, ...], "residual": r}
Json kraus_to_json(const KrausSet& k);
KrausSet kraus_from_json(const Json& j);

// {"kind": "exponential", "kappa": k, "tau_r": t}; custom kernels are
// code-level objects and cannot be serialized.
Json kernel_to_json(const CorrelationKernel& k);
CorrelationKernel kernel_from_json(const Json& j);

// {"kind": "dephasing" | "depolarizing" | "amplitude_damping",
//  "r": [rx, ry, rz]}; a missing "r" selects the per-kind default.
Json channel_to_json(const ChannelSpec& spec);
ChannelSpec channel_from_json(const Json& j);

Json cp_report_to_json(const CPReport& r);

// Locale-independent decimal form with 17 significant digits (round-trip
// exact for double).
std::string format_double(double v);

std::string decay_curve_csv(const std::vector<double>& tau,
                            const std::vector<double>& decay);
std::string trajectory_csv(const std::vector<double>& tau,
                           const std::vector<BlochVector>& s);
std::string tcl_trajectory_csv(const Trajectory& t);
std::string deviation_csv(const std::vector<double>& tau,
                          const std::vector<double>& deviation);

}  // namespace effenv
