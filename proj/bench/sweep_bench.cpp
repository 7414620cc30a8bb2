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

// Timing harness for the grid kernels: serial reference vs OpenMP, with a
// bitwise equality check on the outputs.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "effenv/sweep.hpp"

namespace {

using effenv::BlochVector;
using effenv::ChannelSpec;
using effenv::CorrelationKernel;

struct Timing {
  double serial = 0.0;
  double parallel = 0.0;
  bool identical = false;
};

template <typename SerialFn, typename ParallelFn, typename EqualFn>
Timing time_pair(const SerialFn& serial, const ParallelFn& parallel, const EqualFn& equal) {
  Timing t;
  auto warm = parallel();
  double t0 = omp_get_wtime();
  auto s = serial();
  t.serial = omp_get_wtime() - t0;
  t0 = omp_get_wtime();
  auto p = parallel();
  t.parallel = omp_get_wtime() - t0;
  t.identical = equal(s, p) && equal(warm, p);
  return t;
}

void report(const char* name, std::size_t n, const Timing& t) {
  std::printf("%-18s %9zu pts   serial %8.3f ms   parallel %8.3f ms   x%5.2f   %s\n",
              name, n, 1e3 * t.serial, 1e3 * t.parallel,
              t.parallel > 0.0 ? t.serial / t.parallel : 0.0,
              t.identical ? "bitwise equal" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int decay_points = argc > 1 ? std::atoi(argv[1]) : 400000;
  const int bloch_points = argc > 2 ? std::atoi(argv[2]) : 40000;
  const int cp_points = argc > 3 ? std::atoi(argv[3]) : 10000;
  if (decay_points < 2 || bloch_points < 2 || cp_points < 2) {
    std::fprintf(stderr, "usage: sweep_bench [decay_points] [bloch_points] [cp_points]\n");
    return 2;
  }

  std::printf("threads: %d\n", omp_get_max_threads());

  const CorrelationKernel kernel = CorrelationKernel::exponential(1.0, 1.0);
  const ChannelSpec spec = ChannelSpec::amplitude_damping();
  const BlochVector s0{0.4, 0.3, 0.5};

  {
    const auto grid = effenv::sweep::linspace(0.0, 10.0, decay_points);
    const auto t = time_pair(
        [&] { return effenv::sweep::decay_curve_serial(kernel, grid); },
        [&] { return effenv::sweep::decay_curve(kernel, grid); },
        [](const std::vector<double>& a, const std::vector<double>& b) { return a == b; });
    report("decay_curve", grid.size(), t);
  }

  {
    const auto grid = effenv::sweep::linspace(0.0, 10.0, bloch_points);
    const auto equal = [](const std::vector<BlochVector>& a,
                          const std::vector<BlochVector>& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].x != b[i].x || a[i].y != b[i].y || a[i].z != b[i].z) return false;
      return true;
    };
    const auto t = time_pair(
        [&] {
          return effenv::sweep::bloch_trajectory_serial(
              spec, s0, kernel, grid, effenv::sweep::TrajectoryPath::dilation);
        },
        [&] {
          return effenv::sweep::bloch_trajectory(spec, s0, kernel, grid,
                                                 effenv::sweep::TrajectoryPath::dilation);
        },
        equal);
    report("bloch_trajectory", grid.size(), t);
  }

  {
    const auto grid = effenv::sweep::logspace(1e-3, 10.0, cp_points);
    const auto equal = [](const std::vector<effenv::CPReport>& a,
                          const std::vector<effenv::CPReport>& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].is_cp != b[i].is_cp || a[i].min_eigenvalue != b[i].min_eigenvalue ||
            a[i].choi_eigenvalues != b[i].choi_eigenvalues)
          return false;
      return true;
    };
    const auto t = time_pair(
        [&] { return effenv::sweep::cp_scan_serial(spec, kernel, grid); },
        [&] { return effenv::sweep::cp_scan(spec, kernel, grid); }, equal);
    report("cp_scan", grid.size(), t);
  }

  return 0;
}
