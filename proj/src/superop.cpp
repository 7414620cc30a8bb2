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

#include "effenv/superop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace effenv {

namespace {

constexpr double kCpTolFactor = 1e-10;

void require_square_superop(const SuperOperator& s, const char* who) {
  const Eigen::Index d = s.dim;
  if (d < 1 || s.mat.rows() != d * d || s.mat.cols() != d * d) {
    std::ostringstream msg;
    msg << who << ": matrix must be dim^2 x dim^2";
    throw ShapeError(msg.str());
  }
}

struct ChoiSpectrum {
  Eigen::VectorXd values;  // ascending
  Mat vectors;
  double tolerance = 0.0;
  bool hermitian_preserving = false;
};

ChoiSpectrum choi_spectrum(const SuperOperator& s, double tol) {
  const SuperOperator pt = partial_transpose(s);
  const double scale = max_abs(pt.mat);
  ChoiSpectrum out;
  out.tolerance = tol >= 0.0 ? tol : kCpTolFactor * scale;
  out.hermitian_preserving = max_abs_diff(pt.mat, pt.mat.adjoint()) <= out.tolerance;
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((pt.mat + pt.mat.adjoint()) / 2.0));
  out.values = es.eigenvalues();
  out.vectors = es.eigenvectors();
  return out;
}

// Phase convention: rotate so the largest-magnitude entry (first such entry
// in row-major order) becomes real positive.
void fix_phase(Mat& k) {
  Complex pivot(0.0, 0.0);
  double best = 0.0;
  for (Eigen::Index a = 0; a < k.rows(); ++a)
    for (Eigen::Index b = 0; b < k.cols(); ++b)
      if (std::abs(k(a, b)) > best) {
        best = std::abs(k(a, b));
        pivot = k(a, b);
      }
  if (best > 0.0) k *= std::conj(pivot) / best;
}

bool lex_less_real(const Mat& lhs, const Mat& rhs) {
  for (Eigen::Index a = 0; a < lhs.rows(); ++a)
    for (Eigen::Index b = 0; b < lhs.cols(); ++b) {
      const double l = lhs(a, b).real();
      const double r = rhs(a, b).real();
      if (l != r) return l < r;
    }
  return false;
}

}  // namespace

KrausSet KrausSet::from_ops(std::vector<Mat> ops) {
  if (ops.empty()) throw DomainError("KrausSet: at least one operator required");
  const Eigen::Index d = ops.front().rows();
  for (const Mat& k : ops)
    if (k.rows() != d || k.cols() != d)
      throw ShapeError("KrausSet: operators must be square and equally sized");
  Mat sum = Mat::Zero(d, d);
  for (const Mat& k : ops) sum += k.adjoint() * k;
  KrausSet set;
  set.completeness_residual = max_abs(Mat(sum - Mat::Identity(d, d)));
  set.ops = std::move(ops);
  return set;
}

CpViolationError::CpViolationError(CPReport r)
    : std::runtime_error([&r] {
        std::ostringstream msg;
        msg << "map is not completely positive (min Choi eigenvalue "
            << r.min_eigenvalue << ", tolerance " << r.tolerance_used << ")";
        return msg.str();
      }()),
      report(std::move(r)) {}

SuperOperator superop_from_map(const std::function<Mat(const Mat&)>& action,
                               Eigen::Index d) {
  if (!action) throw DomainError("superop_from_map: action must be callable");
  if (d < 1) throw DomainError("superop_from_map: dimension must be positive");
  SuperOperator s{d, Mat(d * d, d * d)};
  const std::vector<Mat> units = basis(d);
  for (Eigen::Index col = 0; col < d * d; ++col) {
    const Mat image = action(units[static_cast<std::size_t>(col)]);
    if (image.rows() != d || image.cols() != d)
      throw ShapeError("superop_from_map: action changed operator shape");
    s.mat.col(col) = vectorize(image).coords;
  }
  return s;
}

SuperOperator superop_from_kraus(const KrausSet& kraus) {
  if (kraus.ops.empty()) throw DomainError("superop_from_kraus: empty Kraus set");
  const Eigen::Index d = kraus.ops.front().rows();
  SuperOperator s{d, Mat::Zero(d * d, d * d)};
  // X -> sum K X K^dagger has matrix sum kron(K, conj(K)) over the row-major
  // vectorization.
  for (const Mat& k : kraus.ops) {
    if (k.rows() != d || k.cols() != d)
      throw ShapeError("superop_from_kraus: operators must be square and equally sized");
    s.mat += kron(k, k.conjugate());
  }
  return s;
}

SuperOperator partial_transpose(const SuperOperator& s) {
  require_square_superop(s, "partial_transpose");
  const Eigen::Index d = s.dim;
  SuperOperator out{d, Mat(d * d, d * d)};
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      for (Eigen::Index c = 0; c < d; ++c)
        for (Eigen::Index e = 0; e < d; ++e)
          out.mat(a * d + b, c * d + e) = s.mat(a * d + c, b * d + e);
  return out;
}

CPReport check_cp(const SuperOperator& s, double tol) {
  require_square_superop(s, "check_cp");
  const ChoiSpectrum spec = choi_spectrum(s, tol);
  CPReport report;
  report.tolerance_used = spec.tolerance;
  report.hermitian_preserving = spec.hermitian_preserving;
  report.min_eigenvalue = spec.values.minCoeff();
  report.choi_eigenvalues.reserve(static_cast<std::size_t>(spec.values.size()));
  for (Eigen::Index i = 0; i < spec.values.size(); ++i) {
    const double v = spec.values[i];
    report.choi_eigenvalues.push_back(std::abs(v) < spec.tolerance ? 0.0 : v);
  }
  report.is_cp = report.hermitian_preserving &&
                 report.min_eigenvalue >= -report.tolerance_used;
  return report;
}

KrausSet extract_kraus(const SuperOperator& s, double rank_tol) {
  require_square_superop(s, "extract_kraus");
  const CPReport report = check_cp(s);
  if (!report.is_cp) throw CpViolationError(report);

  const ChoiSpectrum spec = choi_spectrum(s, -1.0);
  const double cutoff = rank_tol >= 0.0 ? rank_tol : spec.tolerance;
  const Eigen::Index d = s.dim;

  std::vector<std::pair<double, Mat>> weighted;
  for (Eigen::Index nu = 0; nu < spec.values.size(); ++nu) {
    const double w = spec.values[nu];
    if (w <= cutoff) continue;
    Mat k = std::sqrt(w) * devectorize(HSVector{d, spec.vectors.col(nu)});
    fix_phase(k);
    weighted.emplace_back(w, std::move(k));
  }
  if (weighted.empty())
    throw DomainError("extract_kraus: map has no eigenvalue above the rank tolerance");

  std::sort(weighted.begin(), weighted.end(),
            [](const std::pair<double, Mat>& l, const std::pair<double, Mat>& r) {
              if (l.first != r.first) return l.first > r.first;
              return lex_less_real(l.second, r.second);
            });

  std::vector<Mat> ops;
  ops.reserve(weighted.size());
  for (auto& [w, k] : weighted) ops.push_back(std::move(k));
  return KrausSet::from_ops(std::move(ops));
}

KrausSet remix_kraus(const KrausSet& kraus, const Mat& v, int pad_zeros) {
  if (kraus.ops.empty()) throw DomainError("remix_kraus: empty Kraus set");
  if (pad_zeros < 0) throw DomainError("remix_kraus: pad_zeros must be nonnegative");
  const Eigen::Index n = static_cast<Eigen::Index>(kraus.ops.size()) + pad_zeros;
  if (v.rows() != n || v.cols() != n)
    throw ShapeError("remix_kraus: V must match ops.size() + pad_zeros");
  if (!is_unitary(v, 1e-10)) throw DomainError("remix_kraus: V must be unitary");

  const Eigen::Index d = kraus.ops.front().rows();
  std::vector<Mat> mixed;
  mixed.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index mu = 0; mu < n; ++mu) {
    Mat k = Mat::Zero(d, d);
    for (std::size_t nu = 0; nu < kraus.ops.size(); ++nu)
      k += v(mu, static_cast<Eigen::Index>(nu)) * kraus.ops[nu];
    mixed.push_back(std::move(k));
  }
  return KrausSet::from_ops(std::move(mixed));
}

KrausSet kraus_from_dilation(const Mat& u, const Mat& rho_env) {
  if (u.rows() != u.cols() || rho_env.rows() != rho_env.cols())
    throw ShapeError("kraus_from_dilation: matrices must be square");
  const Eigen::Index env = rho_env.rows();
  if (env < 1 || u.rows() % env != 0)
    throw ShapeError("kraus_from_dilation: dilation must factor over the environment");
  const Eigen::Index d = u.rows() / env;
  if (!is_unitary(u, 1e-10)) throw DomainError("kraus_from_dilation: U must be unitary");
  if (!is_hermitian(rho_env, 1e-10))
    throw DomainError("kraus_from_dilation: rho_env must be Hermitian");
  if (std::abs(rho_env.trace() - Complex(1.0, 0.0)) > 1e-10)
    throw DomainError("kraus_from_dilation: rho_env must have unit trace");

  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((rho_env + rho_env.adjoint()) / 2.0));
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw DomainError("kraus_from_dilation: rho_env must be positive semidefinite");

  // Modes in descending population; m runs over occupied modes only, n over
  // the full eigenbasis so the set stays complete.
  std::vector<Mat> ops;
  for (Eigen::Index mi = env - 1; mi >= 0; --mi) {
    const double p = std::max(0.0, es.eigenvalues()[mi]);
    if (p <= 1e-14) continue;
    const Vec mode_m = es.eigenvectors().col(mi);
    for (Eigen::Index ni = env - 1; ni >= 0; --ni) {
      const Vec mode_n = es.eigenvectors().col(ni);
      Mat k = Mat::Zero(d, d);
      for (Eigen::Index e = 0; e < env; ++e)
        for (Eigen::Index f = 0; f < env; ++f)
          k += std::conj(mode_n[e]) * mode_m[f] * u.block(e * d, f * d, d, d);
      ops.push_back(std::sqrt(p) * k);
    }
  }
  return KrausSet::from_ops(std::move(ops));
}

Mat apply_superop(const SuperOperator& s, const Mat& x) {
  require_square_superop(s, "apply_superop");
  if (x.rows() != s.dim || x.cols() != s.dim)
    throw ShapeError("apply_superop: operand does not match superoperator dimension");
  return devectorize(HSVector{s.dim, s.mat * vectorize(x).coords});
}

}  // namespace effenv
