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

#include "dualcert/witness.hpp"

#include <cmath>
#include <limits>

#include "dualcert/classify.hpp"
#include "dualcert/rng.hpp"

namespace dualcert {

namespace {

constexpr uint64_t kScreenSeedSalt = 0x9e3779b97f4a7c15ull;
constexpr int kScreenTrials = 50;

void require_kind(const DualityVerdict& verdict, WitnessCase require) {
  const VerdictKind needed = (require == WitnessCase::Case1)
                                 ? VerdictKind::CompleteOrderIso
                                 : VerdictKind::CoPositiveOrderIso;
  if (verdict.kind != needed)
    throw WrongBasisKindError(std::string("build_witness: basis classifies ") +
                              to_string(verdict.kind) + ", required " +
                              to_string(needed));
}

CMatrix rank_one_projector(const std::vector<Complex>& v) {
  const int d = static_cast<int>(v.size());
  CMatrix P(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) P(i, j) = v[i] * std::conj(v[j]);
  return P;
}

}  // namespace

CMatrix build_witness(const MatrixBasis& basis, const MapSpec& m, WitnessCase require) {
  if (m.n != basis.n)
    throw DimensionMismatch("build_witness: map n " + std::to_string(m.n) +
                            " != basis n = " + std::to_string(basis.n));
  require_kind(classify_duality(basis), require);
  return generalized_choi(m, basis, /*transposed=*/false);
}

WitnessReport validate_witness(const CMatrix& W, int n, int p, int samples,
                               uint64_t seed) {
  if (W.dim() != n * p)
    throw DimensionMismatch("validate_witness: W dim " + std::to_string(W.dim()) +
                            " != n*p = " + std::to_string(n * p));
  const double wnorm = W.frobenius_norm();
  if (hermiticity_defect(W) > kTolHerm * (1.0 + wnorm))
    throw NotHermitianError("validate_witness: W is not Hermitian");

  WitnessReport report;
  report.witness = W;
  report.num_samples = samples;
  report.seed = seed;

  Rng rng(seed);
  double min_pairing = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const std::vector<Complex> x = rng.haar_vector(p);
    const std::vector<Complex> y = rng.haar_vector(n);
    // <(x (x) y), W (x (x) y)>, real part
    double pairing = 0.0;
    for (int a = 0; a < p; ++a)
      for (int i = 0; i < n; ++i) {
        Complex row = 0.0;
        for (int b = 0; b < p; ++b)
          for (int j = 0; j < n; ++j) row += W(a * n + i, b * n + j) * x[b] * y[j];
        pairing += (std::conj(x[a] * y[i]) * row).real();
      }
    min_pairing = std::min(min_pairing, pairing);
  }
  report.min_product_pairing = (samples > 0) ? min_pairing : 0.0;

  const EigenDecomposition eig = herm_eig(W);
  if (eig.values.front() < -1e-6) {
    std::vector<Complex> v(W.dim());
    for (int i = 0; i < W.dim(); ++i) v[i] = eig.vectors(i, 0);
    report.detected_state = rank_one_projector(v);
    report.detected_pairing = eig.values.front();
  }
  return report;
}

bool screen_positive_map(const MapSpec& m, int trials, uint64_t seed) {
  if (m.n != m.p)
    throw DimensionMismatch("screen_positive_map: only square maps are screened");
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const CMatrix P = rank_one_projector(rng.haar_vector(m.n));
    try {
      if (!is_psd(apply_map(m, P))) return false;
    } catch (const NotHermitianError&) {
      return false;
    }
  }
  return true;
}

WitnessReport witness_report(const MatrixBasis& basis, const MapSpec& m,
                             WitnessCase require, int samples, uint64_t seed) {
  if (m.n != basis.n)
    throw DimensionMismatch("build_witness: map n " + std::to_string(m.n) +
                            " != basis n = " + std::to_string(basis.n));
  const DualityVerdict verdict = classify_duality(basis);
  require_kind(verdict, require);
  const CMatrix W = generalized_choi(m, basis, /*transposed=*/false);
  WitnessReport report = validate_witness(W, basis.n, m.p, samples, seed);
  report.basis_kind_used = to_string(verdict.kind);
  report.map_positive_screen =
      (m.n == m.p) ? screen_positive_map(m, kScreenTrials, seed ^ kScreenSeedSalt)
                   : false;
  return report;
}

}  // namespace dualcert
