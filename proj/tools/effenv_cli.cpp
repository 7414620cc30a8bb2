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

// Command-line front end. Exit codes: 0 success (and "is CP" for check-cp),
// 2 usage or input errors, 3 complete-positivity violations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "effenv/effective_env.hpp"
#include "effenv/errors.hpp"
#include "effenv/serialize.hpp"
#include "effenv/superop.hpp"
#include "effenv/sweep.hpp"

namespace {

using effenv::BlochVector;
using effenv::ChannelSpec;
using effenv::CorrelationKernel;
using effenv::Json;
using effenv::SuperOperator;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotCp = 3;

// Option values starting with '{' are inline JSON, anything else is a path.
Json load_json_arg(const std::string& arg, const char* what) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') {
    return Json::parse(arg);
  }
  std::ifstream in(arg);
  if (!in) throw effenv::DomainError(std::string(what) + ": cannot open file " + arg);
  Json j;
  in >> j;
  return j;
}

CorrelationKernel parse_kernel(const std::string& arg) {
  CorrelationKernel k = effenv::kernel_from_json(load_json_arg(arg, "kernel"));
  if (const char* tol = std::getenv("EFFENV_QUAD_TOL")) {
    std::istringstream in(tol);
    double value = 0.0;
    if (!(in >> value) || !(value > 0.0))
      throw effenv::DomainError("EFFENV_QUAD_TOL must be a positive number");
    k.quad_tol = value;
  }
  return k;
}

ChannelSpec parse_channel(const std::string& arg) {
  return effenv::channel_from_json(load_json_arg(arg, "channel"));
}

BlochVector parse_bloch(const std::string& arg) {
  std::istringstream in(arg);
  BlochVector s;
  char c1 = 0, c2 = 0;
  if (!(in >> s.x >> c1 >> s.y >> c2 >> s.z) || c1 != ',' || c2 != ',' ||
      !(in >> std::ws).eof())
    throw effenv::DomainError("--bloch expects sx,sy,sz");
  if (s.norm() > 1.0 + 1e-12)
    throw effenv::DomainError("--bloch vector must have norm <= 1");
  return s;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw effenv::DomainError("cannot open output file " + path);
  out << content;
}

Json columns_json(const std::vector<std::pair<std::string, std::vector<double>>>& cols) {
  Json j;
  for (const auto& [name, values] : cols) j[name] = values;
  return j;
}

struct CurveArgs {
  std::string kernel;
  std::string channel;
  std::string bloch;
  std::string superop_path;
  std::string out;
  std::string format = "csv";
  double tau_max = 0.0;
  int points = 201;
  bool closed_form = false;
};

void check_grid(const CurveArgs& args) {
  if (!(args.tau_max > 0.0)) throw effenv::DomainError("--tau-max must be positive");
  if (args.points < 2) throw effenv::DomainError("--points must be at least 2");
}

int run_decay_curve(const CurveArgs& args) {
  check_grid(args);
  const CorrelationKernel kernel = parse_kernel(args.kernel);
  const std::vector<double> grid = effenv::sweep::linspace(0.0, args.tau_max, args.points);
  const std::vector<double> values = effenv::sweep::decay_curve(kernel, grid);
  if (args.format == "json")
    write_output(args.out, columns_json({{"tau", grid}, {"decay", values}}).dump() + "\n");
  else
    write_output(args.out, effenv::decay_curve_csv(grid, values));
  return kExitOk;
}

int run_simulate(const CurveArgs& args) {
  check_grid(args);
  const CorrelationKernel kernel = parse_kernel(args.kernel);
  const ChannelSpec spec = parse_channel(args.channel);
  const BlochVector s0 = parse_bloch(args.bloch);
  const std::vector<double> grid = effenv::sweep::linspace(0.0, args.tau_max, args.points);
  const auto path = args.closed_form ? effenv::sweep::TrajectoryPath::closed_form
                                     : effenv::sweep::TrajectoryPath::dilation;
  const std::vector<BlochVector> traj =
      effenv::sweep::bloch_trajectory(spec, s0, kernel, grid, path);
  if (args.format == "json") {
    std::vector<double> sx, sy, sz;
    for (const BlochVector& s : traj) {
      sx.push_back(s.x);
      sy.push_back(s.y);
      sz.push_back(s.z);
    }
    write_output(args.out,
                 columns_json({{"tau", grid}, {"sx", sx}, {"sy", sy}, {"sz", sz}}).dump() + "\n");
  } else {
    write_output(args.out, effenv::trajectory_csv(grid, traj));
  }
  return kExitOk;
}

SuperOperator resolve_superop(const CurveArgs& args) {
  if (!args.superop_path.empty())
    return effenv::superop_from_json(load_json_arg(args.superop_path, "superop"));
  if (args.kernel.empty() || args.channel.empty())
    throw effenv::DomainError("need either --superop or both --kernel and --channel");
  if (args.tau_max < 0.0) throw effenv::DomainError("--tau-max must be nonnegative");
  return effenv::channel_superop(parse_channel(args.channel), parse_kernel(args.kernel),
                                 args.tau_max);
}

int run_check_cp(const CurveArgs& args) {
  const effenv::CPReport report = effenv::check_cp(resolve_superop(args));
  write_output(args.out, effenv::cp_report_to_json(report).dump() + "\n");
  return report.is_cp ? kExitOk : kExitNotCp;
}

int run_kraus(const CurveArgs& args) {
  const effenv::KrausSet kraus = effenv::extract_kraus(resolve_superop(args));
  write_output(args.out, effenv::kraus_to_json(kraus).dump() + "\n");
  return kExitOk;
}

int run_compare_tcl(const CurveArgs& args) {
  check_grid(args);
  const CorrelationKernel kernel = parse_kernel(args.kernel);
  const ChannelSpec spec = parse_channel(args.channel);
  const BlochVector s0 = args.bloch.empty() ? BlochVector{1.0, 0.0, 0.0}
                                            : parse_bloch(args.bloch);
  const effenv::sweep::DeviationCurve curve =
      effenv::sweep::tcl_deviation(spec, s0, kernel, args.tau_max, args.points);
  if (args.format == "json")
    write_output(args.out,
                 columns_json({{"tau", curve.tau}, {"deviation", curve.deviation}}).dump() + "\n");
  else
    write_output(args.out, effenv::deviation_csv(curve.tau, curve.deviation));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"completely positive qubit decoherence from a one-qubit effective environment"};
  app.require_subcommand(1);

  CurveArgs args;

  const auto add_kernel = [&](CLI::App* cmd, bool required) {
    CLI::Option* opt = cmd->add_option("--kernel", args.kernel,
                                       "correlation kernel (inline JSON or file path)");
    if (required) opt->required();
  };
  const auto add_channel = [&](CLI::App* cmd, bool required) {
    CLI::Option* opt = cmd->add_option("--channel", args.channel,
                                       "channel spec (inline JSON or file path)");
    if (required) opt->required();
  };
  const auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--tau-max", args.tau_max, "end of the time grid")->required();
    cmd->add_option("--points", args.points, "grid points (default 201)");
  };
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", args.out, "output path (default stdout)");
    cmd->add_option("--format", args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* decay = app.add_subcommand("decay-curve", "coherence decay over a time grid");
  add_kernel(decay, true);
  add_grid(decay);
  add_output(decay);

  CLI::App* simulate = app.add_subcommand("simulate", "Bloch trajectory of a channel");
  add_kernel(simulate, true);
  add_channel(simulate, true);
  simulate->add_option("--bloch", args.bloch, "initial Bloch vector sx,sy,sz")->required();
  simulate->add_flag("--closed-form", args.closed_form,
                     "use the closed-form dynamics instead of the dilation");
  add_grid(simulate);
  add_output(simulate);

  CLI::App* check = app.add_subcommand("check-cp", "complete-positivity report");
  add_kernel(check, false);
  add_channel(check, false);
  check->add_option("--tau-max", args.tau_max, "evaluation time for --kernel/--channel");
  check->add_option("--superop", args.superop_path, "explicit superoperator JSON file");
  add_output(check);

  CLI::App* kraus = app.add_subcommand("kraus", "canonical Kraus decomposition");
  add_kernel(kraus, false);
  add_channel(kraus, false);
  kraus->add_option("--tau-max", args.tau_max, "evaluation time for --kernel/--channel");
  kraus->add_option("--superop", args.superop_path, "explicit superoperator JSON file");
  add_output(kraus);

  CLI::App* compare = app.add_subcommand("compare-tcl",
                                         "master equation vs dilation deviation curve");
  add_kernel(compare, true);
  add_channel(compare, true);
  compare->add_option("--bloch", args.bloch, "initial Bloch vector (default 1,0,0)");
  add_grid(compare);
  add_output(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decay->parsed()) return run_decay_curve(args);
    if (simulate->parsed()) return run_simulate(args);
    if (check->parsed()) return run_check_cp(args);
    if (kraus->parsed()) return run_kraus(args);
    if (compare->parsed()) return run_compare_tcl(args);
    return kExitUsage;
  } catch (const effenv::CpViolationError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << effenv::cp_report_to_json(e.report).dump() << "\n";
    return kExitNotCp;
  } catch (const effenv::NonCpRegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotCp;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
