// Copyright 2026 The dualcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualcert/classify.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "dualcert/choi.hpp"
#include "dualcert/superop.hpp"

namespace dualcert {

namespace {

struct RankOneAnalysis {
  RankOneDiagnostics diag;
  bool passes = false;
  double top_value = 0.0;
  std::vector<Complex> top_vector;
};

// Top eigenpair of the Hermitian part, residual against the original M.
RankOneAnalysis analyze_rank_one(const CMatrix& M, double tol) {
  const int N = M.dim();
  RankOneAnalysis out;
  const double norm = M.frobenius_norm();
  out.diag.herm_defect = hermiticity_defect(M);
  out.diag.hermitian = out.diag.herm_defect <= tol * (1.0 + norm);

  EigenDecomposition eig = herm_eig(M, /*tol=*/1e300);  // symmetrized part
  out.diag.min_eigenvalue = eig.values.front();
  for (int k = 0; k < std::min(4, N); ++k)
    out.diag.smallest_eigenvalues.push_back(eig.values[k]);

  out.top_value = std::max(eig.values.back(), 0.0);
  out.top_vector.resize(N);
  for (int i = 0; i < N; ++i) out.top_vector[i] = eig.vectors(i, N - 1);

  double res2 = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Complex term =
          M(i, j) - out.top_value * out.top_vector[i] * std::conj(out.top_vector[j]);
      res2 += std::norm(term);
    }
  out.diag.residual = std::sqrt(res2) / (1.0 + norm);

  const bool psd = out.diag.min_eigenvalue >= -tol * (1.0 + norm);
  out.passes = out.diag.hermitian && psd && out.diag.residual <= tol;
  return out;
}

// Multiplies by a unit phase so the largest-modulus entry (ties: lowest
// row-major index) is real positive.
CMatrix phase_normalize(const CMatrix& C) {
  int best = 0;
  double best_mod = -1.0;
  for (size_t k = 0; k < C.flat().size(); ++k) {
    const double mod = std::abs(C.flat()[k]);
    if (mod > best_mod) {
      best_mod = mod;
      best = static_cast<int>(k);
    }
  }
  if (best_mod <= 0.0) return C;
  const Complex phase = C.flat()[best] / best_mod;
  return std::conj(phase) * C;
}

// Reshape sqrt(lambda_1) * v1 into C via C_ki = w[i*n + k].
CMatrix factor_from_top_pair(const RankOneAnalysis& an, int n) {
  CMatrix C(n);
  const double scale = std::sqrt(an.top_value);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) C(k, i) = scale * an.top_vector[i * n + k];
  return phase_normalize(C);
}

bool is_invertible(const CMatrix& C) {
  const int n = C.dim();
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = C(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  return svd.singularValues()(n - 1) > 1e-10 * svd.singularValues()(0);
}

// Max over matrix units of ||S(E_k) - C E_k C^*||_F (optionally with a
// transpose on the conjugation side), relative to (1 + ||C||_F^2).
double action_residual(const SuperOp& S, const CMatrix& C, bool transposed) {
  const int n = S.n;
  const CMatrix Cadj = C.adjoint();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CMatrix E = CMatrix::unit(n, i, j);
      CMatrix expect = C * E * Cadj;
      if (transposed) expect = expect.transpose();
      worst = std::max(worst, (apply(S, E) - expect).frobenius_norm());
    }
  const double scale = 1.0 + C.frobenius_norm() * C.frobenius_norm();
  return worst / scale;
}

}  // namespace

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::CompleteOrderIso: return "CompleteOrderIso";
    case VerdictKind::CoPositiveOrderIso: return "CoPositiveOrderIso";
    case VerdictKind::NotOrderIso: return "NotOrderIso";
  }
  return "unknown";
}

std::optional<CMatrix> rank_one_psd_factor(const CMatrix& M, double tol) {
  const int N = M.dim();
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(N))));
  if (n * n != N)
    throw InvalidArgument("rank_one_psd_factor: dim " + std::to_string(N) +
                          " is not a square");
  RankOneAnalysis an = analyze_rank_one(M, tol);
  if (!an.passes) return std::nullopt;
  return factor_from_top_pair(an, n);
}

DualityVerdict classify_duality(const MatrixBasis& basis, double tol) {
  const SuperOp S = m_map(basis);
  const int n = basis.n;

  const MapSpec as_map = MapSpec::from_superop(S);
  const CMatrix K1 = choi_matrix(as_map).mat;
  CMatrix K2(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CMatrix img = apply(S, CMatrix::unit(n, i, j)).transpose();
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) K2(i * n + a, j * n + b) = img(a, b);
    }

  RankOneAnalysis a1 = analyze_rank_one(K1, tol);
  RankOneAnalysis a2 = analyze_rank_one(K2, tol);

  DualityVerdict verdict;
  verdict.diagnostics.k1 = a1.diag;
  verdict.diagnostics.k2 = a2.diag;

  if (n >= 2 && a1.passes && a2.passes)
    throw Error("classify_duality: both factorizations passed for n >= 2");

  if (a1.passes) {
    CMatrix C = factor_from_top_pair(a1, n);
    const double res = action_residual(S, C, false);
    if (is_invertible(C) && res <= 1e-8) {
      verdict.kind = VerdictKind::CompleteOrderIso;
      verdict.C = std::move(C);
      verdict.diagnostics.action_residual = res;
      return verdict;
    }
  }
  if (a2.passes) {
    CMatrix C = factor_from_top_pair(a2, n);
    const double res = action_residual(S, C, true);
    if (is_invertible(C) && res <= 1e-8) {
      verdict.kind = VerdictKind::CoPositiveOrderIso;
      verdict.C = std::move(C);
      verdict.diagnostics.action_residual = res;
      return verdict;
    }
  }
  verdict.kind = VerdictKind::NotOrderIso;
  return verdict;
}

DualityVerdict classify_scaled_unit(const CMatrix& lambda, double tol) {
  const int n = lambda.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(lambda(i, j)) == 0.0)
        throw ZeroLambdaError("classify_scaled_unit: lambda(" + std::to_string(i) +
                              "," + std::to_string(j) + ") is zero");

  CMatrix L(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) L(i, j) = lambda(i, j) * lambda(i, j);

  RankOneAnalysis an = analyze_rank_one(L, tol);
  DualityVerdict verdict;
  verdict.diagnostics.k1 = an.diag;
  // The co-positive factorization is impossible for scaled-unit bases;
  // k2 is reported empty.
  if (an.passes) {
    std::vector<Complex> alpha(n);
    const double scale = std::sqrt(an.top_value);
    for (int i = 0; i < n; ++i) alpha[i] = scale * an.top_vector[i];
    CMatrix C = phase_normalize(CMatrix::diag(alpha));
    if (is_invertible(C)) {
      verdict.kind = VerdictKind::CompleteOrderIso;
      double worst = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          worst = std::max(worst, std::abs(C(i, i) * std::conj(C(j, j)) - L(i, j)));
      verdict.diagnostics.action_residual =
          worst / (1.0 + C.frobenius_norm() * C.frobenius_norm());
      verdict.C = std::move(C);
      return verdict;
    }
  }
  verdict.kind = VerdictKind::NotOrderIso;
  return verdict;
}

}  // namespace dualcert
