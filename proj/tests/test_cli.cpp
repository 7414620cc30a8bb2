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

// End-to-end checks of the installed binary, driven through the shell.
// EFFENV_CLI_PATH is injected by the build.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef EFFENV_CLI_PATH
#error "EFFENV_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kKernel = R"('{"kind":"exponential","kappa":1.0,"tau_r":1.0}')";
const std::string kSlowKernel = R"('{"kind":"exponential","kappa":1.0,"tau_r":10.0}')";
const std::string kNearMarkovKernel = R"('{"kind":"exponential","kappa":1.0,"tau_r":1e-9}')";
const std::string kDephasing = R"('{"kind":"dephasing"}')";
const std::string kDepolarizing = R"('{"kind":"depolarizing"}')";
const std::string kAmpDamping = R"('{"kind":"amplitude_damping"}')";

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "effenv_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& capture = "") {
  std::string cmd = std::string(EFFENV_CLI_PATH) + " " + args;
  if (!capture.empty()) cmd += " >" + capture;
  cmd += " 2>" + (scratch_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

// Rows of a CSV as parsed doubles, header skipped.
std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("usage errors exit with code 2, help with 0") {
  CHECK(run("") == 2);
  CHECK(run("--help") == 0);
  CHECK(run("no-such-command") == 2);
  CHECK(run("decay-curve --tau-max 1") == 2);   // --kernel missing
  CHECK(run("decay-curve --kernel " + kKernel) == 2);  // --tau-max missing
  CHECK(run("decay-curve --kernel " + kKernel + " --tau-max 1 --format yaml") == 2);
  CHECK(run("decay-curve --kernel " + kKernel + " --tau-max 0") == 2);
  CHECK(run("decay-curve --kernel " + kKernel + " --tau-max 1 --points 1") == 2);
  CHECK(run("decay-curve --kernel '{\"kind\":\"gaussian\"}' --tau-max 1") == 2);
  CHECK(run("decay-curve --kernel /no/such/file.json --tau-max 1") == 2);
}

TEST_CASE("decay-curve reproduces pinned values") {
  const fs::path out = scratch_dir() / "decay.csv";
  CHECK(run("decay-curve --kernel " + kNearMarkovKernel +
            " --tau-max 1 --points 2 --out " + out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("tau,decay\n0,1\n", 0) == 0);
  const auto rows = csv_rows(text);
  REQUIRE(rows.size() == 2);
  CHECK(std::abs(rows[1][1] - 0.36787944117144233) <= 1e-6);

  CHECK(run("decay-curve --kernel " + kSlowKernel +
            " --tau-max 1 --points 2 --out " + out.string()) == 0);
  const auto slow = csv_rows(slurp(out));
  CHECK(std::abs(slow[1][1] - 0.95277720985057113) <= 1e-12);
}

TEST_CASE("decay-curve output is byte-identical across runs and sinks") {
  const fs::path a = scratch_dir() / "decay_a.csv";
  const fs::path b = scratch_dir() / "decay_b.csv";
  const std::string args =
      "decay-curve --kernel " + kKernel + " --tau-max 5 --points 101";
  CHECK(run(args + " --out " + a.string()) == 0);
  CHECK(run(args + " --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));

  const fs::path redirected = scratch_dir() / "decay_stdout.csv";
  CHECK(run(args, redirected.string()) == 0);
  CHECK(slurp(redirected) == slurp(a));

  const fs::path j = scratch_dir() / "decay.json";
  CHECK(run(args + " --format json --out " + j.string()) == 0);
  const json parsed = json::parse(slurp(j));
  CHECK(parsed["tau"].size() == 101);
  CHECK(parsed["decay"].size() == 101);
  CHECK(parsed["decay"][0].get<double>() == 1.0);
}

TEST_CASE("kernel option accepts a file path") {
  const fs::path kfile = scratch_dir() / "kernel.json";
  spit(kfile, R"({"kind":"exponential","kappa":1.0,"tau_r":1.0})");
  const fs::path via_file = scratch_dir() / "via_file.csv";
  const fs::path inline_out = scratch_dir() / "via_inline.csv";
  CHECK(run("decay-curve --kernel " + kfile.string() + " --tau-max 2 --out " +
            via_file.string()) == 0);
  CHECK(run("decay-curve --kernel " + kKernel + " --tau-max 2 --out " +
            inline_out.string()) == 0);
  CHECK(slurp(via_file) == slurp(inline_out));
}

TEST_CASE("simulate: dilation and closed-form paths agree") {
  const fs::path dil = scratch_dir() / "sim_dilation.csv";
  const fs::path cf = scratch_dir() / "sim_closed.csv";
  const std::string base = "simulate --kernel " + kKernel + " --channel " +
                           kAmpDamping + " --bloch 0.2,-0.5,0.7 --tau-max 4 --points 41";
  CHECK(run(base + " --out " + dil.string()) == 0);
  CHECK(run(base + " --closed-form --out " + cf.string()) == 0);

  const auto a = csv_rows(slurp(dil));
  const auto b = csv_rows(slurp(cf));
  REQUIRE(a.size() == 41);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 1; c < 4; ++c)
      CHECK(std::abs(a[i][c] - b[i][c]) <= 1e-12);
  // Row 0 is the initial vector.
  CHECK(std::abs(a[0][1] - 0.2) <= 1e-13);
  CHECK(std::abs(a[0][2] + 0.5) <= 1e-13);
  CHECK(std::abs(a[0][3] - 0.7) <= 1e-13);

  CHECK(run("simulate --kernel " + kKernel + " --channel " + kDephasing +
            " --bloch 1,1,1 --tau-max 1") == 2);
  CHECK(run("simulate --kernel " + kKernel + " --channel " + kDephasing +
            " --bloch 0.5,0.5 --tau-max 1") == 2);
}

TEST_CASE("check-cp: channels pass, the transpose map fails with code 3") {
  const fs::path report_path = scratch_dir() / "cp.json";
  CHECK(run("check-cp --kernel " + kKernel + " --channel " + kDephasing +
            " --tau-max 1 --out " + report_path.string()) == 0);
  const json report = json::parse(slurp(report_path));
  CHECK(report["is_cp"].get<bool>());
  CHECK(report["hermitian_preserving"].get<bool>());
  CHECK(report["min_eigenvalue"].get<double>() >= -1e-10);

  // Transpose map: superoperator is the SWAP matrix; its Choi matrix has a
  // -1 eigenvalue.
  json transpose;
  transpose["dim"] = 2;
  transpose["mat"] = json::array();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const int a = r / 2, b = r % 2, cc = c / 2, e = c % 2;
      transpose["mat"].push_back(
          json::array({a == e && b == cc ? 1.0 : 0.0, 0.0}));
    }
  const fs::path tfile = scratch_dir() / "transpose.json";
  spit(tfile, transpose.dump());
  CHECK(run("check-cp --superop " + tfile.string() + " --out " +
            report_path.string()) == 3);
  const json treport = json::parse(slurp(report_path));
  CHECK_FALSE(treport["is_cp"].get<bool>());
  CHECK(std::abs(treport["min_eigenvalue"].get<double>() + 1.0) <= 1e-12);

  // Identity map: Choi eigenvalues are [0, 0, 0, 2].
  json ident;
  ident["dim"] = 2;
  ident["mat"] = json::array();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      ident["mat"].push_back(json::array({r == c ? 1.0 : 0.0, 0.0}));
  const fs::path ifile = scratch_dir() / "identity.json";
  spit(ifile, ident.dump());
  CHECK(run("check-cp --superop " + ifile.string() + " --out " +
            report_path.string()) == 0);
  const json ireport = json::parse(slurp(report_path));
  const auto eigs = ireport["choi_eigenvalues"].get<std::vector<double>>();
  REQUIRE(eigs.size() == 4);
  CHECK(eigs[0] == 0.0);
  CHECK(eigs[1] == 0.0);
  CHECK(eigs[2] == 0.0);
  CHECK(std::abs(eigs[3] - 2.0) <= 1e-12);

  // Malformed superoperator file.
  const fs::path bad = scratch_dir() / "bad.json";
  spit(bad, R"({"dim": 2, "mat": [[1.0, 0.0]]})");
  CHECK(run("check-cp --superop " + bad.string()) == 2);
  CHECK(run("check-cp") == 2);  // neither --superop nor kernel+channel
}

TEST_CASE("kraus: operator counts match the channel ranks") {
  const fs::path out = scratch_dir() / "kraus.json";
  CHECK(run("kraus --kernel " + kKernel + " --channel " + kDephasing +
            " --tau-max 1 --out " + out.string()) == 0);
  const json deph = json::parse(slurp(out));
  CHECK(deph["ops"].size() == 2);
  CHECK(deph["residual"].get<double>() <= 1e-10);

  CHECK(run("kraus --kernel " + kKernel + " --channel " + kDepolarizing +
            " --tau-max 1 --out " + out.string()) == 0);
  const json depol = json::parse(slurp(out));
  CHECK(depol["ops"].size() == 4);

  // Non-CP input is rejected with the CP exit code.
  json transpose;
  transpose["dim"] = 2;
  transpose["mat"] = json::array();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const int a = r / 2, b = r % 2, cc = c / 2, e = c % 2;
      transpose["mat"].push_back(
          json::array({a == e && b == cc ? 1.0 : 0.0, 0.0}));
    }
  const fs::path tfile = scratch_dir() / "transpose_kraus.json";
  spit(tfile, transpose.dump());
  CHECK(run("kraus --superop " + tfile.string()) == 3);
}

TEST_CASE("compare-tcl: dephasing deviation stays below 1e-6") {
  const fs::path out = scratch_dir() / "tcl.csv";
  CHECK(run("compare-tcl --kernel " + kKernel + " --channel " + kDephasing +
            " --tau-max 5 --points 21 --out " + out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("tau,deviation\n", 0) == 0);
  const auto rows = csv_rows(text);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0][1] <= 1e-13);
  for (const auto& row : rows) CHECK(row[1] <= 1e-6);
}

TEST_CASE("EFFENV_QUAD_TOL is honored and validated") {
  const std::string args = std::string(EFFENV_CLI_PATH) + " decay-curve --kernel " +
                           kKernel + " --tau-max 1 --points 3";
  const std::string sink =
      " >/dev/null 2>" + (scratch_dir() / "stderr.txt").string();

  int status = std::system(("EFFENV_QUAD_TOL=1e-8 " + args + sink).c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);

  status = std::system(("EFFENV_QUAD_TOL=abc " + args + sink).c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);

  status = std::system(("EFFENV_QUAD_TOL=-1 " + args + sink).c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);
}
